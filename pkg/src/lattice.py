"""Exact integer linear algebra: Hermite normal form, kernels, lattice coordinates."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

IntMatrix = List[List[int]]
RationalMatrix = Sequence[Sequence[Fraction]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def exgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _combine_rows(m: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int):
    # replace m[i] by a*m[i] + b*m[j] and m[j] by c*m[i] + d*m[j]
    for k in range(len(m[i])):
        e = m[i][k]
        m[i][k] = a * e + b * m[j][k]
        m[j][k] = c * e + d * m[j][k]


def hnf(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and H == U * M. H is in row echelon
    form with positive pivots, entries above each pivot reduced into
    [0, pivot), and zero rows at the bottom.
    """
    H = [list(map(int, row)) for row in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(m)
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        for i in range(pivot_row + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[pivot_row][col]
            g, x, y = exgcd(a, b)
            # [[x, y], [-b/g, a/g]] has determinant 1
            _combine_rows(H, pivot_row, i, x, y, -b // g, a // g)
            _combine_rows(U, pivot_row, i, x, y, -b // g, a // g)
        p = H[pivot_row][col]
        if p == 0:
            continue
        if p < 0:
            H[pivot_row] = [-e for e in H[pivot_row]]
            U[pivot_row] = [-e for e in U[pivot_row]]
            p = -p
        for i in range(pivot_row):
            q = H[i][col] // p
            if q:
                H[i] = [e - q * f for e, f in zip(H[i], H[pivot_row])]
                U[i] = [e - q * f for e, f in zip(U[i], U[pivot_row])]
        pivot_row += 1
    return H, U


def hnf_rank(H: IntMatrix) -> int:
    """Number of nonzero rows of a matrix already in Hermite normal form."""
    return sum(1 for row in H if any(row))


def rank(S: RationalMatrix) -> int:
    """Rank over the rationals."""
    rows = [list(row) for row in S]
    if not rows or not rows[0]:
        return 0
    entries = [[QQ(Fraction(e).numerator, Fraction(e).denominator) for e in row] for row in rows]
    return DomainMatrix(entries, (len(rows), len(rows[0])), QQ).rank()


def clear_denominators(S: RationalMatrix) -> IntMatrix:
    """Scale each row by the lcm of its denominators."""
    result = []
    for row in S:
        row = [Fraction(e) for e in row]
        scale = lcm(*(e.denominator for e in row)) if row else 1
        result.append([int(e * scale) for e in row])
    return result


@dataclass(frozen=True)
class LatticeBasis:
    """Basis of a sublattice of Z^n, kept in Hermite normal form."""

    nvars: int
    vectors: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_vectors(cls, nvars: int, vectors: Sequence[Sequence[int]]) -> 'LatticeBasis':
        """Canonical basis of the lattice spanned by the given vectors."""
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(nvars, ())
        H, _ = hnf(vectors)
        return cls(nvars, tuple(tuple(row) for row in H if any(row)))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, e in enumerate(row) if e) for row in self.vectors)

    def combine(self, coords: Sequence[int]) -> Tuple[int, ...]:
        """The vector sum(coords[i] * B_i)."""
        result = [0] * self.nvars
        for c, row in zip(coords, self.vectors):
            for j, e in enumerate(row):
                result[j] += c * e
        return tuple(result)


def kernel_basis(S: RationalMatrix, n: int) -> LatticeBasis:
    """Canonical basis of the saturated lattice {I in Z^n : S*I = 0}."""
    A = clear_denominators(S)
    A = [row for row in A if any(row)]
    if not A:
        return LatticeBasis(n, tuple(tuple(row) for row in identity(n)))
    # U * A^T = H; rows of U facing zero rows of H span the left kernel of A^T
    transpose = [[A[i][j] for i in range(len(A))] for j in range(n)]
    H, U = hnf(transpose)
    kernel = [U[i] for i in range(n) if not any(H[i])]
    return LatticeBasis.from_vectors(n, kernel)


def lattice_coords(B: LatticeBasis, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """The integer c with sum(c_i * B_i) == v, or None when v is not in the lattice."""
    if len(v) != B.nvars:
        raise ValueError(f"vector of length {len(v)} for a lattice in Z^{B.nvars}")
    residual = list(v)
    coords = []
    for row, p in zip(B.vectors, B.pivots()):
        c, r = divmod(residual[p], row[p])
        if r:
            return None
        coords.append(c)
        if c:
            residual = [e - c * f for e, f in zip(residual, row)]
    if any(residual):
        return None
    return tuple(coords)
