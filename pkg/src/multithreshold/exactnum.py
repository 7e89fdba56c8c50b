"""Exact arithmetic over the rational span of 1 and square roots of distinct primes.

Every value is a rational coefficient vector over a fixed ordered basis
(1, sqrt(p1), sqrt(p2), ...) with strictly increasing primes p1 < p2 < ...
Square roots of distinct primes are linearly independent over the rationals,
so equality is decided by comparing coefficient vectors alone, and ordering
is decided by refining rational interval enclosures until they separate,
which must happen for unequal values.  No floating point is used anywhere;
enclosures are computed with integer square roots at doubling precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Sequence

UNIT_SYMBOL = "1"

LESS, EQUAL, GREATER = -1, 0, 1

# Precision (fractional bits) where interval refinement starts.  Doubled on
# every round that fails to separate the operands.
_START_PREC = 64

Rational = int | Fraction


def sqrt_symbol(p: int) -> str:
    return f"sqrt({p})"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def first_primes(count: int) -> tuple[int, ...]:
    """The first `count` primes, smallest first."""
    found: list[int] = []
    n = 2
    while len(found) < count:
        if is_prime(n):
            found.append(n)
        n += 1
    return tuple(found)


@lru_cache(maxsize=None)
def _sqrt_scaled(p: int, prec: int) -> int:
    """Largest integer s with s <= sqrt(p) * 2**prec."""
    return isqrt(p << (2 * prec))


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi


class Basis:
    """Ordered basis symbols (1, sqrt(p1), ..., sqrt(pk)).

    The unit symbol is always present and always first.  Primes must be
    distinct and strictly increasing so that each basis has one canonical
    form and mixed-basis arithmetic can be rejected early.
    """

    __slots__ = ("primes", "symbols")

    def __init__(self, primes: Iterable[int] = ()):
        primes = tuple(int(p) for p in primes)
        for i, p in enumerate(primes):
            if not is_prime(p):
                raise ValueError(f"basis entry {p} is not prime")
            if i > 0 and primes[i - 1] >= p:
                raise ValueError("basis primes must be strictly increasing")
        self.primes: tuple[int, ...] = primes
        self.symbols: tuple[str, ...] = (UNIT_SYMBOL,) + tuple(
            sqrt_symbol(p) for p in primes
        )

    def __len__(self) -> int:
        return 1 + len(self.primes)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Basis) and self.primes == other.primes

    def __hash__(self) -> int:
        return hash(self.primes)

    def __repr__(self) -> str:
        return f"Basis(primes={self.primes})"

    def element(self, coeffs: Sequence[Rational]) -> "FieldElement":
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return self.rational(0)

    def rational(self, q: Rational) -> "FieldElement":
        coeffs = [Fraction(q)] + [Fraction(0)] * len(self.primes)
        return FieldElement(self, coeffs)

    def symbol_element(self, index: int) -> "FieldElement":
        """Unit coefficient vector for the symbol at `index` (0 is the unit)."""
        if not 0 <= index < len(self):
            raise IndexError(f"basis index {index} out of range")
        coeffs = [Fraction(0)] * len(self)
        coeffs[index] = Fraction(1)
        return FieldElement(self, coeffs)

    def sqrt_of(self, p: int) -> "FieldElement":
        """The element sqrt(p); p must be one of the basis primes."""
        try:
            idx = self.primes.index(p)
        except ValueError:
            raise ValueError(f"sqrt({p}) is not in this basis") from None
        return self.symbol_element(idx + 1)


class FieldElement:
    """A value in the rational span of a Basis.

    Immutable by convention.  Supports addition, subtraction, negation and
    scaling by rationals; products of two irrational elements would leave
    the span and are deliberately unsupported.
    """

    __slots__ = ("basis", "coeffs", "_bnds", "_best", "_extra")

    def __init__(self, basis: Basis, coeffs: Sequence[Rational]):
        coeffs = tuple(
            c if isinstance(c, Fraction) else Fraction(c) for c in coeffs
        )
        if len(coeffs) != len(basis):
            raise ValueError(
                f"expected {len(basis)} coefficients, got {len(coeffs)}"
            )
        self.basis = basis
        self.coeffs = coeffs
        self._bnds: dict[int, tuple[int, int]] = {}
        self._best: RationalInterval | None = None
        self._extra: int | None = None

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: object) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.basis != self.basis:
                raise ValueError("mixed bases")
            return other
        if isinstance(other, (int, Fraction)):
            return self.basis.rational(other)
        return None

    def __add__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.basis, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.basis, [a - b for a, b in zip(self.coeffs, o.coeffs)]
        )

    def __rsub__(self, other: object) -> "FieldElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.basis, [-a for a in self.coeffs])

    def __mul__(self, other: object) -> "FieldElement":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        q = Fraction(other)
        return FieldElement(self.basis, [a * q for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FieldElement":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def _bounds(self, prec: int) -> tuple[int, int]:
        """Integer bounds (lo, hi) with lo/2**prec <= value <= hi/2**prec."""
        cached = self._bnds.get(prec)
        if cached is not None:
            return cached
        lo = 0
        hi = 0
        primes = self.basis.primes
        for idx, q in enumerate(self.coeffs):
            if not q:
                continue
            n, d = q.numerator, q.denominator
            if idx == 0:
                x = n << prec
                lo += x // d
                hi += -((-x) // d)
            else:
                s = _sqrt_scaled(primes[idx - 1], prec)
                x0 = n * s
                x1 = n * (s + 1)
                if x0 > x1:
                    x0, x1 = x1, x0
                lo += x0 // d
                hi += -((-x1) // d)
        self._bnds[prec] = (lo, hi)
        return lo, hi

    def compare(self, other: "FieldElement") -> int:
        """-1, 0 or +1.  Equality is coefficient equality; order is decided
        by refining enclosures, which terminates because the basis values
        are linearly independent over the rationals."""
        if not isinstance(other, FieldElement) or other.basis != self.basis:
            raise ValueError("can only compare elements over the same basis")
        if self.coeffs == other.coeffs:
            return EQUAL
        prec = _START_PREC
        while True:
            alo, ahi = self._bounds(prec)
            blo, bhi = other._bounds(prec)
            if ahi < blo:
                return LESS
            if bhi < alo:
                return GREATER
            prec <<= 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, self.coeffs))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "FieldElement") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "FieldElement") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "FieldElement") -> bool:
        return self.compare(other) >= 0

    # ------------------------------------------------------------------
    # enclosures and views
    # ------------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element has irrational part")
        return self.coeffs[0]

    def _overhead_bits(self) -> int:
        if self._extra is None:
            total = sum(abs(c) for c in self.coeffs) + 2 * len(self.coeffs) + 2
            self._extra = (int(total) + 1).bit_length()
        return self._extra

    def enclosure(self, precision: int) -> RationalInterval:
        """Interval containing the value, of width at most 2**-precision.

        Repeated calls return nested intervals: the best enclosure seen so
        far is cached and intersected with each newly computed one.
        """
        if precision < 1:
            raise ValueError("precision must be a positive integer")
        if self.is_rational:
            q = self.coeffs[0]
            return RationalInterval(q, q)
        prec = precision + self._overhead_bits()
        lo, hi = self._bounds(prec)
        scale = 1 << prec
        iv = RationalInterval(Fraction(lo, scale), Fraction(hi, scale))
        best = self._best
        if best is not None:
            iv = RationalInterval(max(best.lo, iv.lo), min(best.hi, iv.hi))
        self._best = iv
        return iv

    def decompose(self) -> tuple[tuple[str, Fraction], ...]:
        """Coefficient vector paired with basis symbols, unit first."""
        return tuple(zip(self.basis.symbols, self.coeffs))

    def approx_float(self) -> float:
        """Crude float approximation, for human-readable diagnostics only."""
        lo, hi = self._bounds(_START_PREC)
        return (lo + hi) / 2 / (1 << _START_PREC)

    def __repr__(self) -> str:
        parts = [f"{c}*{s}" for s, c in self.decompose() if c]
        return "FieldElement(" + (" + ".join(parts) if parts else "0") + ")"


# ----------------------------------------------------------------------
# gap measurement
# ----------------------------------------------------------------------


def min_positive_gap(values: Sequence[FieldElement]) -> Fraction | None:
    """A positive rational strictly below every distance between distinct values.

    Returns None when all values are equal (no pair constrains anything).
    The result is half of a proven lower bound on the smallest pairwise
    difference, so every pair of distinct values differs by more than it.
    """
    values = list(values)
    if not values:
        raise ValueError("need at least one value")
    basis = values[0].basis
    distinct: dict[tuple[Fraction, ...], FieldElement] = {}
    for v in values:
        if v.basis != basis:
            raise ValueError("mixed bases")
        distinct.setdefault(v.coeffs, v)
    elems = list(distinct.values())
    if len(elems) == 1:
        return None

    # Sort by enclosure lower bound, refining until all distinct values have
    # pairwise disjoint enclosures.  Then the smallest gap must occur between
    # neighbours, and the distance between facing endpoints bounds it below.
    prec = _START_PREC
    while True:
        bnds = [e._bounds(prec) for e in elems]
        order = sorted(range(len(elems)), key=lambda i: bnds[i][0])
        if all(
            bnds[order[i]][1] < bnds[order[i + 1]][0]
            for i in range(len(order) - 1)
        ):
            break
        prec <<= 1
    min_diff = min(
        bnds[order[i + 1]][0] - bnds[order[i]][1]
        for i in range(len(order) - 1)
    )
    return Fraction(min_diff, 1 << (prec + 1))


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def fraction_to_str(q: Fraction) -> str:
    """Canonical numerator/denominator form, reduced, denominator positive."""
    return f"{q.numerator}/{q.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def basis_to_json(basis: Basis) -> list[str]:
    return list(basis.symbols)


def basis_from_json(symbols: Sequence[str]) -> Basis:
    if not symbols or symbols[0] != UNIT_SYMBOL:
        raise ValueError("basis must start with the unit symbol")
    primes = []
    for s in symbols[1:]:
        if not (s.startswith("sqrt(") and s.endswith(")")):
            raise ValueError(f"unrecognized basis symbol {s!r}")
        primes.append(int(s[5:-1]))
    return Basis(primes)


def element_to_json(e: FieldElement) -> dict:
    return {
        "basis": basis_to_json(e.basis),
        "coeffs": [fraction_to_str(c) for c in e.coeffs],
    }


def element_from_json(obj: dict) -> FieldElement:
    basis = basis_from_json(obj["basis"])
    coeffs = [fraction_from_str(c) for c in obj["coeffs"]]
    return FieldElement(basis, coeffs)
