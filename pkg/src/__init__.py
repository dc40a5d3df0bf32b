"""monoval - monomial valuations, their residue fields, blow-up charts and group quotients."""

__version__ = "0.1.0"
