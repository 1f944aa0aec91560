"""Irrational constants as named symbols with certified enclosure oracles.

A symbol stands for one real number.  Its oracle maps a precision (in
bits) to an exact rational interval [lo, hi] containing the value, with
hi - lo <= 2**-bits.  All built-in oracles run on plain integers
(scaled by 2**guard_bits) with explicit floor-error accounting, so the
returned intervals are rigorous, not merely "probably correct" floats.

Symbols are compared by name: two symbols with the same name are the
same constant.  Declaring symbols independent is the caller's promise;
nothing here proves irrationality or linear independence.
"""

from fractions import Fraction
from math import isqrt

from .errors import OracleFailure


class IrrationalSymbol:
    """A named real constant with a monotone rational-enclosure oracle.

    The raw oracle may return any valid enclosure; results are cached and
    intersected so that enclosures handed out are nested as precision
    grows.  An oracle whose enclosures are mutually inconsistent raises
    OracleFailure.
    """

    __slots__ = ("name", "_oracle", "_best")

    def __init__(self, name, oracle):
        self.name = name
        self._oracle = oracle
        self._best = None  # narrowest enclosure seen so far

    def enclosure(self, bits):
        """Certified interval [lo, hi] with hi - lo <= 2**-bits."""
        width_cap = Fraction(1, 1 << bits)
        best = self._best
        if best is not None and best[1] - best[0] <= width_cap:
            return best
        lo, hi = self._oracle(bits)
        lo, hi = Fraction(lo), Fraction(hi)
        if hi - lo > width_cap:
            raise OracleFailure(self.name, bits)
        if best is not None:
            lo, hi = max(lo, best[0]), min(hi, best[1])
            if lo > hi:
                raise OracleFailure(self.name, bits, f"oracle for {self.name!r} returned disjoint enclosures")
        self._best = (lo, hi)
        return self._best

    def __eq__(self, other):
        return isinstance(other, IrrationalSymbol) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"IrrationalSymbol({self.name!r})"


def _scaled(m, err, guard):
    """Interval [m, m+err] / 2**guard as Fractions."""
    return Fraction(m, 1 << guard), Fraction(m + err, 1 << guard)


def sqrt_oracle(n):
    """Oracle for sqrt(n), n a positive non-square integer."""

    def oracle(bits):
        m = isqrt(n << (2 * bits))
        return _scaled(m, 1, bits)

    return oracle


def golden_oracle(bits):
    """(1 + sqrt(5)) / 2."""
    g = bits + 2
    m = isqrt(5 << (2 * g))
    lo = Fraction((1 << g) + m, 1 << (g + 1))
    hi = Fraction((1 << g) + m + 1, 1 << (g + 1))
    return lo, hi


def e_oracle(bits):
    """Euler's number via the factorial series, floor errors tracked."""
    g = bits + 16
    term = 1 << g
    total = term
    i = 0
    while term:
        i += 1
        term //= i
        total += term
    # i floor errors of < 1 each, plus tail < 2 once term hit 0
    return _scaled(total, i + 2, g)


def log2_oracle(bits):
    """log(2) = sum 1/(i * 2**i); tail after g terms is below one ulp."""
    g = bits + 16
    total = 0
    for i in range(1, g + 1):
        total += (1 << (g - i)) // i
    return _scaled(total, g + 1, g)


def _machin_atan_inv(x, g):
    """(floor-tracked scaled arctan(1/x), error bound in ulps of 2**-g)."""
    total = 0
    k = 0
    power = x
    sign = 1
    terms = 0
    while True:
        term = (1 << g) // ((2 * k + 1) * power)
        if term == 0:
            break
        total += sign * term
        sign = -sign
        k += 1
        power *= x * x
        terms += 1
    return total, terms + 1  # floor errors + alternating tail


def pi_oracle(bits):
    """Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239)."""
    g = bits + 16
    s5, e5 = _machin_atan_inv(5, g)
    s239, e239 = _machin_atan_inv(239, g)
    value = 16 * s5 - 4 * s239
    err = 16 * e5 + 4 * e239
    return _scaled(value - err, 2 * err, g)


def decimal_digits_oracle(text):
    """Oracle backed by a decimal expansion string like "1.4142135...".

    The digits must be a truncation of the true expansion, so the value
    lies in [d, d+1] * 10**-n.  Precision is capped by the number of
    digits supplied; beyond that the oracle raises OracleFailure.
    """
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if "." in text:
        int_part, frac_part = text.split(".", 1)
    else:
        int_part, frac_part = text, ""
    frac_part = "".join(frac_part.split())
    digits = int(int_part or "0") * 10 ** len(frac_part) + int(frac_part or "0")
    n = len(frac_part)

    def oracle(bits):
        # need 10**-n <= 2**-bits
        if Fraction(1, 10**n) > Fraction(1, 1 << bits):
            raise OracleFailure("digit string", bits, f"only {n} decimal digits available")
        if sign > 0:
            return Fraction(digits, 10**n), Fraction(digits + 1, 10**n)
        return Fraction(-(digits + 1), 10**n), Fraction(-digits, 10**n)

    return oracle


SQRT2 = IrrationalSymbol("sqrt2", sqrt_oracle(2))
SQRT3 = IrrationalSymbol("sqrt3", sqrt_oracle(3))
SQRT5 = IrrationalSymbol("sqrt5", sqrt_oracle(5))
GOLDEN = IrrationalSymbol("golden", golden_oracle)
EULER_E = IrrationalSymbol("e", e_oracle)
PI = IrrationalSymbol("pi", pi_oracle)
LOG2 = IrrationalSymbol("log2", log2_oracle)

BUILTIN_SYMBOLS = {
    s.name: s for s in (SQRT2, SQRT3, SQRT5, GOLDEN, EULER_E, PI, LOG2)
}
