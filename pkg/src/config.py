"""Configuration management for monoval."""

import os
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file if it exists
load_dotenv()


def _env_bool(name: str, default: str = 'false') -> bool:
    return os.getenv(name, default).lower() in ('1', 'true', 'yes')


class Config:
    """Configuration class for report and algorithm settings."""

    # Report settings
    DEFAULT_DIGITS: int = int(os.getenv('MONOVAL_DIGITS', '6'))
    DEFAULT_SESSION: Optional[str] = os.getenv('MONOVAL_SESSION')

    # Progress lines on stderr (stdout stays byte-stable)
    VERBOSE: bool = _env_bool('MONOVAL_VERBOSE')

    # Group closure bound; larger closures are reported as infinite groups
    MAX_GROUP_ORDER: int = int(os.getenv('MONOVAL_MAX_GROUP_ORDER', '10000'))

    # Degree cap for invariant generators listed in group reports
    INVARIANT_DEGREE: int = int(os.getenv('MONOVAL_INVARIANT_DEGREE', '2'))

    # API server settings
    HOST: str = os.getenv('HOST', '0.0.0.0')
    PORT: int = int(os.getenv('PORT', '8000'))
    DEBUG: bool = _env_bool('DEBUG')

    @classmethod
    def validate(cls) -> dict:
        """Validate configuration and return the effective settings."""
        return {
            'default_digits': cls.DEFAULT_DIGITS >= 1,
            'max_group_order': cls.MAX_GROUP_ORDER >= 1,
            'invariant_degree': cls.INVARIANT_DEGREE >= 1,
            'default_session': cls.DEFAULT_SESSION is not None and os.path.exists(cls.DEFAULT_SESSION),
            'settings': {
                'digits': cls.DEFAULT_DIGITS,
                'max_group_order': cls.MAX_GROUP_ORDER,
                'invariant_degree': cls.INVARIANT_DEGREE,
                'verbose': cls.VERBOSE,
            }
        }
