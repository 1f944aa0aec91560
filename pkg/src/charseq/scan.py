"""Certified integer scans: which k in a range put frac(k * alpha) inside
a prescribed union of arcs, for several (alpha, arcs) conditions at once.

The kernel (compiled or pure, see _kernels) classifies fast in fixed
point; whatever it reports as ambiguous is settled here with exact
arithmetic, so scan results are certified regardless of backend.  For a
rational generator with a moderate denominator the kernel gets an exact
residue lookup table and nothing is ever ambiguous.
"""

from dataclasses import dataclass
from fractions import Fraction

from ._kernels import SHIFT, ScanKernel
from .circle import DEFAULT_MAX_BITS, CircleElement, compare_to_rational, frac
from .errors import UndecidableMembership

# residue tables beyond this denominator switch to fixed point
TABLE_CAP = 1 << 21


@dataclass(frozen=True)
class Piece:
    """One interval piece inside [0, 1] with endpoint openness flags."""

    lo: Fraction
    hi: Fraction
    open_lo: bool = False
    open_hi: bool = False

    def holds_rational(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.open_lo:
            return False
        if x == self.hi and self.open_hi:
            return False
        return True


@dataclass(frozen=True)
class ArcCondition:
    """Constraint "frac(k * element) lies in the union of pieces"."""

    element: CircleElement
    pieces: tuple

    @property
    def trivially_true(self):
        return any(p.lo == 0 and p.hi == 1 and not p.open_lo and not p.open_hi for p in self.pieces)

    @property
    def trivially_false(self):
        return not self.pieces

    @staticmethod
    def norm_at_most(element, bound, strict=False):
        """||k*element|| <= bound (or < when strict)."""
        bound = Fraction(bound)
        if bound < 0 or (strict and bound == 0):
            return ArcCondition(element, ())
        if bound >= Fraction(1, 2):
            if not strict or bound > Fraction(1, 2):
                return ArcCondition(element, (Piece(Fraction(0), Fraction(1)),))
        pieces = (
            Piece(Fraction(0), bound, False, strict),
            Piece(1 - bound, Fraction(1), strict, False),
        )
        if bound == 0:
            pieces = (Piece(Fraction(0), Fraction(0)),)
        return ArcCondition(element, pieces)

    @staticmethod
    def in_open_arc(element, lo, hi):
        """frac(k*element) lies in the open circle arc (lo, hi), 0 < hi-lo < 1."""
        lo, hi = Fraction(lo), Fraction(hi)
        if not 0 < hi - lo < 1:
            raise ValueError("open arc must have length in (0, 1)")
        a = frac(lo)
        b = a + (hi - lo)
        if b <= 1:
            return ArcCondition(element, (Piece(a, b, True, True),))
        return ArcCondition(
            element,
            (Piece(Fraction(0), b - 1, False, True), Piece(a, Fraction(1), True, False)),
        )

    def holds_exact(self, k, max_precision=DEFAULT_MAX_BITS):
        """Certified membership for one k, independent of the kernel."""
        y = k * self.element
        if y.is_rational:
            x = y.rational
            return any(p.holds_rational(x) for p in self.pieces)
        for p in self.pieces:
            try:
                if compare_to_rational(y, p.lo, max_precision) > 0 and (
                    compare_to_rational(y, p.hi, max_precision) < 0
                ):
                    return True
            except UndecidableMembership:
                raise UndecidableMembership(k)
        return False


def _floor_scaled(x: Fraction, scale: int) -> int:
    return (x.numerator * scale) // x.denominator


def _ceil_scaled(x: Fraction, scale: int) -> int:
    return -((-x.numerator * scale) // x.denominator)


def _residue_table(q: int, pieces) -> bytes:
    """Exact membership table over residues r/q, via integer bounds."""
    table = bytearray(q)
    for p in pieces:
        lo_r = _floor_scaled(p.lo, q) + 1 if p.open_lo else _ceil_scaled(p.lo, q)
        hi_r = _ceil_scaled(p.hi, q) - 1 if p.open_hi else _floor_scaled(p.hi, q)
        lo_r = max(lo_r, 0)
        hi_r = min(hi_r, q - 1)
        if hi_r >= lo_r:
            table[lo_r : hi_r + 1] = b"\x01" * (hi_r - lo_r + 1)
    return bytes(table)


def _fixed_arcs(pieces):
    scale = 1 << SHIFT
    arcs = []
    for p in pieces:
        lo_b = _floor_scaled(p.lo, scale) + 1 if p.open_lo else _ceil_scaled(p.lo, scale)
        hi_b = _ceil_scaled(p.hi, scale) - 1 if p.open_hi else _floor_scaled(p.hi, scale)
        arcs.append((lo_b, hi_b))
    return tuple(arcs)


class Scan:
    """A reusable certified scan for a fixed set of conditions."""

    def __init__(self, conds, max_precision=DEFAULT_MAX_BITS):
        self.max_precision = max_precision
        self._always_empty = any(c.trivially_false for c in conds)
        self._conds = tuple(c for c in conds if not c.trivially_true and not c.trivially_false)
        compiled = []
        for cond in self._conds:
            el = cond.element
            if el.is_rational and el.rational.denominator <= TABLE_CAP:
                q = el.rational.denominator
                compiled.append(("rat", q, el.rational.numerator, _residue_table(q, cond.pieces)))
            else:
                lo, _hi = el.reduced_enclosure(SHIFT)
                compiled.append(("fix", _floor_scaled(lo, 1 << SHIFT), _fixed_arcs(cond.pieces)))
        self._kernel = ScanKernel(compiled)

    def range(self, lo, hi):
        """All certified matches in [lo, hi], ascending."""
        if self._always_empty or hi < lo:
            return []
        hits, ambiguous = self._kernel.scan_range(lo, hi)
        if not ambiguous:
            return hits
        resolved = [k for k in ambiguous if self._holds(k)]
        return sorted(hits + resolved)

    def _holds(self, k):
        return all(c.holds_exact(k, self.max_precision) for c in self._conds)

    def stream(self, start, stop, chunk=1 << 15):
        """Certified matches in [start, stop], ascending, lazily by chunk."""
        lo = start
        while lo <= stop:
            hi = min(lo + chunk - 1, stop)
            yield from self.range(lo, hi)
            lo = hi + 1

    def first(self, start, stop, chunk=1 << 15):
        """Smallest certified match in [start, stop], or None."""
        for k in self.stream(start, stop, chunk):
            return k
        return None
