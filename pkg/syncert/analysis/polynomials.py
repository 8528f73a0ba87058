"""Real polynomials and rational functions in the Laplace variable `s`.

Denominators are kept as a multiset of monic factors so that sums of admittances
share poles instead of multiplying them, and determinants can cancel known factors
by exact division.
"""

from collections.abc import Sequence
from functools import reduce

import numpy as np
from numpy.polynomial.polynomial import Polynomial as NumpyPolynomial

from syncert.analysis.errors import DegreeOverflowError

FACTOR_MATCH_REL = 1e-9


class Polynomial(NumpyPolynomial):
    """Coefficients `[1, 2, 3]` correspond to `1 + 2s + 3s^2`."""

    def trimmed(self, tol: float = 0.0) -> "Polynomial":
        """Drop leading coefficients with magnitude at most `tol * |coef|_2`."""
        coef = np.asarray(self.coef, dtype=float)
        scale = np.linalg.norm(coef)
        if scale == 0:
            return Polynomial([0.0])
        keep = np.nonzero(np.abs(coef) > tol * scale)[0]
        if keep.size == 0:
            return Polynomial([0.0])
        return Polynomial(coef[: keep[-1] + 1])

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coef)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.coef))

    def monic(self) -> "Polynomial":
        lead = self.trimmed().coef[-1]
        return Polynomial(self.trimmed().coef / lead) if lead else Polynomial([0.0])

    def magnitude_scale(self, s: complex) -> float:
        """Sum of `|c_k| |s|^k`, the natural scale of `p(s)` for cancellation tests."""
        return float(np.sum(np.abs(self.coef) * np.abs(s) ** np.arange(len(self.coef))))

    def roots_companion(self) -> np.ndarray:
        """Roots from the eigenvalues of the companion matrix, sorted by (Re, Im)."""
        p = self.trimmed()
        if p.degree() < 1:
            return np.zeros(0, dtype=complex)
        roots = np.asarray(NumpyPolynomial.roots(p), dtype=complex)
        return np.array(sorted(roots, key=lambda r: (r.real, r.imag)), dtype=complex)


ONE = Polynomial([1.0])


def divides(u: Polynomial, v: Polynomial, tol: float) -> tuple[bool, Polynomial]:
    """Whether `v` divides `u` up to a remainder of relative norm `tol`; returns the quotient."""
    quotient, remainder = divmod(u, v)
    ok = Polynomial(remainder.coef).norm <= tol * max(u.norm, np.finfo(float).tiny)
    return ok, Polynomial(quotient.coef)


def approximate_gcd(u: Polynomial, v: Polynomial, tol: float = 1e-10) -> Polynomial:
    """Monic greatest common divisor by Euclid's algorithm with relative remainder cut."""
    u, v = u.trimmed(), v.trimmed()
    if u.is_zero:
        return v.monic() if not v.is_zero else ONE
    if v.is_zero:
        return u.monic()
    if v.degree() > u.degree():
        u, v = v, u
    u, v = u.monic(), v.monic()
    for _ in range(1000):
        if v.degree() == 0:
            return ONE
        remainder = Polynomial((u % v).coef).trimmed(tol)
        if remainder.is_zero or remainder.norm <= tol * u.norm:
            return v.monic()
        u, v = v, remainder.monic()
    raise ValueError("gcd(u, v) failed to converge")


def factors_match(a: Polynomial, b: Polynomial) -> bool:
    if a.degree() != b.degree():
        return False
    scale = max(a.norm, b.norm)
    return float(np.linalg.norm(a.coef - b.coef)) <= FACTOR_MATCH_REL * scale


def multiset_union(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> list[Polynomial]:
    """Least common multiple of two factor multisets."""
    merged = list(a)
    pool = list(a)
    for f in b:
        hit = next((k for k, g in enumerate(pool) if factors_match(f, g)), None)
        if hit is None:
            merged.append(f)
        else:
            pool.pop(hit)
    return merged


def multiset_difference(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> list[Polynomial]:
    """Factors of `a` not matched in `b`; every factor of `b` must occur in `a`."""
    rest = list(a)
    for f in b:
        hit = next((k for k, g in enumerate(rest) if factors_match(f, g)), None)
        if hit is None:
            raise ValueError("Factor multiset is not contained in the target.")
        rest.pop(hit)
    return rest


def product(polys: Sequence[Polynomial]) -> Polynomial:
    return reduce(lambda x, y: Polynomial((x * y).coef), polys, ONE)


class RationalFunction:
    """Real rational function `num(s) / prod(factors)`.

    Denominator factors are monic with degree at least one. The zero function is `0/1`.
    """

    def __init__(self, num: Polynomial | Sequence[float] | float, factors=()):
        num = num if isinstance(num, Polynomial) else Polynomial(np.atleast_1d(num))
        self.num = num.trimmed()
        self.factors: tuple[Polynomial, ...] = () if self.num.is_zero else tuple(factors)

    @classmethod
    def from_coefficients(
        cls, num: Sequence[float], den: Sequence[float] = (1.0,), tol: float = 1e-10
    ) -> "RationalFunction":
        """Build from ascending coefficient lists, cancelling common factors."""
        n = Polynomial(np.asarray(num, dtype=float)).trimmed()
        d = Polynomial(np.asarray(den, dtype=float)).trimmed()
        if d.is_zero:
            raise ZeroDivisionError("Rational function denominator is zero")
        if n.is_zero:
            return cls(0.0)
        g = approximate_gcd(n, d, tol)
        if g.degree() >= 1:
            n = Polynomial((n // g).coef)
            d = Polynomial((d // g).coef)
        lead = d.trimmed().coef[-1]
        n = Polynomial(n.coef / lead)
        d = d.monic()
        return cls(n, (d,) if d.degree() >= 1 else ())

    @property
    def den(self) -> Polynomial:
        return product(self.factors)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(float(other))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.factors)

    def __add__(self, other) -> "RationalFunction":
        other = self._lift(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        lcm = multiset_union(self.factors, other.factors)
        num = self.num * product(multiset_difference(lcm, self.factors)) + other.num * product(
            multiset_difference(lcm, other.factors)
        )
        return RationalFunction(Polynomial(num.coef), lcm)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._lift(other)
        num = Polynomial((self.num * other.num).coef)
        return RationalFunction(num, self.factors + other.factors)

    __rmul__ = __mul__

    def __call__(self, s):
        return self.num(s) / self.den(s)

    def is_pole(self, s: complex, tol: float = 1e-9) -> bool:
        """True when some denominator factor vanishes at `s` relative to its scale."""
        return any(abs(f(s)) <= tol * max(f.magnitude_scale(s), 1.0) for f in self.factors)

    def poles(self) -> np.ndarray:
        if not self.factors:
            return np.zeros(0, dtype=complex)
        return np.concatenate([f.roots_companion() for f in self.factors])

    def coefficients(self) -> tuple[list[float], list[float]]:
        return [float(c) for c in self.num.coef], [float(c) for c in self.den.coef]

    def __repr__(self) -> str:
        num, den = self.coefficients()
        return f"RationalFunction(num={num}, den={den})"


def check_degree(p: Polynomial, cap: int) -> None:
    if p.degree() > cap:
        raise DegreeOverflowError(p.degree(), cap)


def polynomial_det(entries: list[list[Polynomial]]) -> Polynomial:
    """Division-free determinant by cofactor expansion memoized over column subsets."""
    n = len(entries)
    if n == 0:
        return ONE
    memo: dict[tuple[int, int], Polynomial] = {}

    def minor(row: int, cols: int) -> Polynomial:
        # `cols` is a bitmask of the columns still available to rows row..n-1.
        if row == n:
            return ONE
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Polynomial([0.0])
        sign = 1.0
        for col in range(n):
            if not cols >> col & 1:
                continue
            entry = entries[row][col]
            if not entry.is_zero:
                sub = minor(row + 1, cols & ~(1 << col))
                total = Polynomial((total + sign * entry * sub).coef)
            sign = -sign
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def rational_det(
    matrix: Sequence[Sequence[RationalFunction]], *, tol: float = 1e-10, degree_cap: int = 64
) -> RationalFunction:
    """Determinant of a square matrix of rational functions.

    Each row is scaled by the least common multiple of its denominators, the resulting
    polynomial determinant is expanded without division, and the row multipliers are
    cancelled against it factor by factor where exact division succeeds.

    Raises:
        DegreeOverflowError: if any intermediate polynomial exceeds `degree_cap`.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("rational_det requires a square matrix.")

    entries: list[list[Polynomial]] = []
    denominator: list[Polynomial] = []
    for row in matrix:
        lcm: list[Polynomial] = []
        for entry in row:
            lcm = multiset_union(lcm, entry.factors)
        multiplier = product(lcm)
        check_degree(multiplier, degree_cap)
        entries.append(
            [
                Polynomial((e.num * product(multiset_difference(lcm, e.factors))).coef)
                for e in row
            ]
        )
        denominator.extend(lcm)

    num = polynomial_det(entries).trimmed(np.finfo(float).eps)
    check_degree(num, degree_cap)
    if num.is_zero:
        return RationalFunction(0.0)

    kept: list[Polynomial] = []
    for factor in denominator:
        ok, quotient = divides(num, factor, tol)
        if ok and not quotient.trimmed().is_zero:
            num = quotient.trimmed(np.finfo(float).eps)
        else:
            kept.append(factor)
    return RationalFunction(num, kept)
