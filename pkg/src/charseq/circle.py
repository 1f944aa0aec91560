"""Exact points of the circle group R/Z and the distance-to-integers norm.

A CircleElement is a rational number plus a rational-coefficient
combination of declared irrational symbols, kept in canonical form.
Equality of canonical forms decides equality of the points, which is
valid exactly because the symbols are *declared* linearly independent
over Q together with 1.

Norms of irrational points are never produced as floats; every query
returns a certified rational interval, refined by doubling the working
precision up to a cap.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import UndecidableMembership
from .oracles import IrrationalSymbol

DEFAULT_START_BITS = 64
DEFAULT_MAX_BITS = 4096

Rational = Fraction  # alias for signatures


def frac(x: Fraction) -> Fraction:
    """Fractional part in [0, 1)."""
    return x - (x.numerator // x.denominator)


def rational_norm(x: Fraction) -> Fraction:
    """Distance from a rational to the nearest integer, exactly."""
    f = frac(x)
    return min(f, 1 - f)


class CircleElement:
    """A point of R/Z: reduced rational part + irrational symbol combination.

    Canonical form: rational part in [0, 1), zero coefficients dropped,
    coefficients sorted by symbol name.  Immutable and hashable.
    """

    __slots__ = ("rational", "coeffs", "_hash")

    def __init__(self, rational=0, coeffs=()):
        object.__setattr__(self, "rational", frac(Fraction(rational)))
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        cleaned = tuple(
            sorted(
                ((s, Fraction(c)) for s, c in coeffs if c != 0),
                key=lambda item: item[0].name,
            )
        )
        names = [s.name for s, _ in cleaned]
        if len(set(names)) != len(names):
            merged = {}
            for s, c in cleaned:
                merged[s] = merged.get(s, Fraction(0)) + c
            cleaned = tuple(
                sorted(((s, c) for s, c in merged.items() if c != 0), key=lambda item: item[0].name)
            )
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "_hash", hash((self.rational, tuple((s.name, c) for s, c in cleaned))))

    def __setattr__(self, *a):
        raise AttributeError("CircleElement is immutable")

    @property
    def is_rational(self):
        return not self.coeffs

    @property
    def is_zero(self):
        return self.rational == 0 and not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, CircleElement):
            return NotImplemented
        return (
            self.rational == other.rational
            and tuple((s.name, c) for s, c in self.coeffs)
            == tuple((s.name, c) for s, c in other.coeffs)
        )

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if not isinstance(other, CircleElement):
            other = CircleElement(other)
        merged = dict(self.coeffs)
        for s, c in other.coeffs:
            merged[s] = merged.get(s, Fraction(0)) + c
        return CircleElement(self.rational + other.rational, merged)

    def __neg__(self):
        return CircleElement(-self.rational, tuple((s, -c) for s, c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, CircleElement):
            other = CircleElement(other)
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return CircleElement(k * self.rational, tuple((s, k * c) for s, c in self.coeffs))

    __rmul__ = __mul__

    def real_enclosure(self, bits):
        """Certified interval for the representative real value
        rational + sum(c * symbol), width <= 2**-bits (not reduced mod 1)."""
        lo = hi = self.rational
        n = len(self.coeffs)
        if n == 0:
            return lo, hi
        # split the width budget evenly across the terms
        per_term_bits = bits + 1 + max(1, n - 1).bit_length()
        for s, c in self.coeffs:
            scale = abs(c)
            extra = max(0, (scale.numerator // scale.denominator).bit_length())
            slo, shi = s.enclosure(per_term_bits + extra)
            if c >= 0:
                lo, hi = lo + c * slo, hi + c * shi
            else:
                lo, hi = lo + c * shi, hi + c * slo
        return lo, hi

    def reduced_enclosure(self, bits):
        """Enclosure of the point mod 1: (lo, hi) with 0 <= lo < 1 and
        hi - lo <= 2**-bits; hi may reach past 1 when the interval wraps."""
        lo, hi = self.real_enclosure(bits)
        shift = lo.numerator // lo.denominator
        return lo - shift, hi - shift

    def __repr__(self):
        parts = []
        if self.rational or not self.coeffs:
            parts.append(str(self.rational))
        for s, c in self.coeffs:
            parts.append(f"{c}*{s.name}" if c != 1 else s.name)
        return "CircleElement(" + " + ".join(parts) + ")"

    def label(self):
        """Compact text form used in reports and provenance."""
        parts = []
        if self.rational or not self.coeffs:
            parts.append(str(self.rational))
        for s, c in self.coeffs:
            parts.append(f"{c}*{s.name}" if c != 1 else s.name)
        return "+".join(parts)


ZERO = CircleElement(0)


@dataclass(frozen=True)
class NormBound:
    """Certified interval around a norm value; 0 <= lo <= hi <= 1/2."""

    lo: Fraction
    hi: Fraction
    decided: bool = True

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo


class Cmp(Enum):
    LE = "le"
    GT = "gt"
    UNDECIDABLE = "undecidable"


class Membership(Enum):
    IN = "in"
    OUT = "out"
    BOUNDARY = "boundary"


def _tent_image(lo: Fraction, hi: Fraction):
    """Image of a real interval (width < 1/2) under distance-to-nearest-integer."""
    shift = lo.numerator // lo.denominator
    lo, hi = lo - shift, hi - shift  # now lo in [0,1), hi < 3/2
    dlo = rational_norm(lo)
    dhi = rational_norm(hi)
    out_lo, out_hi = min(dlo, dhi), max(dlo, dhi)
    if lo <= 1 <= hi or lo == 0:
        out_lo = Fraction(0)
    if lo <= Fraction(1, 2) <= hi:
        out_hi = Fraction(1, 2)
    return out_lo, out_hi


def norm_interval(alpha: CircleElement, k: int, bits: int):
    """Certified interval for ||k * alpha||.  Exact point for rational alpha."""
    if alpha.is_rational:
        v = rational_norm(k * alpha.rational)
        return v, v
    if k == 0:
        return Fraction(0), Fraction(0)
    lo, hi = (k * alpha).real_enclosure(bits + 1)
    return _tent_image(lo, hi)


def norm(alpha: CircleElement, k: int, precision: int = DEFAULT_START_BITS) -> NormBound:
    """The circle norm ||k*alpha|| as a certified interval.

    Interval width is at most 2**(-precision+2); exact for rational alpha.
    """
    if precision < 8:
        raise ValueError("precision must be at least 8 bits")
    lo, hi = norm_interval(alpha, k, precision)
    return NormBound(lo, hi)


def compare_norm(
    alpha: CircleElement,
    k: int,
    threshold: Fraction,
    max_precision: int = DEFAULT_MAX_BITS,
    strict: bool = False,
) -> Cmp:
    """Certified comparison of ||k*alpha|| against a rational threshold.

    Returns LE when provably <= (or < if strict), GT when provably the
    opposite, UNDECIDABLE only if the cap is reached without separation
    (impossible for rational alpha, where the comparison is exact).
    """
    threshold = Fraction(threshold)
    if not 0 <= threshold <= Fraction(1, 2):
        raise ValueError("threshold must lie in [0, 1/2]")
    if alpha.is_rational:
        v = rational_norm(k * alpha.rational)
        ok = v < threshold if strict else v <= threshold
        return Cmp.LE if ok else Cmp.GT
    bits = DEFAULT_START_BITS
    while True:
        lo, hi = norm_interval(alpha, k, bits)
        if strict:
            if hi < threshold:
                return Cmp.LE
            if lo >= threshold:
                return Cmp.GT
        else:
            if hi <= threshold:
                return Cmp.LE
            if lo > threshold:
                return Cmp.GT
        if bits >= max_precision:
            return Cmp.UNDECIDABLE
        bits = min(2 * bits, max_precision)


def compare_to_rational(
    x: CircleElement, bound: Fraction, max_precision: int = DEFAULT_MAX_BITS
):
    """Sign of (x mod 1) - bound for rational bound in [0, 1]: -1, 0 or +1.

    Exact for rational x.  For irrational x the enclosure is refined until
    it lies strictly on one side; the interval can wrap past 1 only while
    it is still wide, so refinement resolves every case except an exact
    rational tie, which the independence declaration rules out but which
    cannot be certified below the cap: UndecidableMembership then.
    """
    bound = Fraction(bound)
    if x.is_rational:
        v = frac(x.rational)
        return (v > bound) - (v < bound)
    bits = DEFAULT_START_BITS
    while True:
        lo, hi = x.reduced_enclosure(bits)
        if hi <= 1:  # no wrap: ordinary interval comparison
            if hi < bound:
                return -1
            if lo > bound:
                return 1
        if bits >= max_precision:
            raise UndecidableMembership(None, f"comparison of {x!r} with {bound} undecidable")
        bits = min(2 * bits, max_precision)


def distance_interval(x: CircleElement, y: CircleElement, bits: int):
    """Certified interval for the circle distance ||x - y||."""
    return norm_interval(x - y, 1, bits)


def separation_lower_bound(
    x: CircleElement, y: CircleElement, max_precision: int = DEFAULT_MAX_BITS
):
    """A positive rational lower bound on the circle distance of two
    distinct points, or None if the cap is hit without separating."""
    d = x - y
    if d.is_rational:
        v = rational_norm(d.rational)
        return v if v > 0 else None
    bits = DEFAULT_START_BITS
    while True:
        lo, hi = norm_interval(d, 1, bits)
        if lo > 0:
            return lo
        if bits >= max_precision:
            return None
        bits = min(2 * bits, max_precision)
