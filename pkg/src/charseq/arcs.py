"""Finite unions of closed arcs of the circle with exact rational endpoints.

Arcs are stored split at 0: the internal form is a sorted tuple of
disjoint, non-touching closed intervals inside [0, 1].  An arc crossing
0 appears as the two pieces [0, x] and [y, 1]; as circle subsets this is
the same set, and splitting consistently makes the representation
canonical, so equality of piece tuples is equality of sets.

Degenerate single-point arcs are legal: they show up as intersections of
arcs that touch in exactly one point.
"""

from fractions import Fraction

from .circle import (
    DEFAULT_MAX_BITS,
    CircleElement,
    Membership,
    frac,
)
from .errors import InvalidSigma, UndecidableMembership

ONE = Fraction(1)


def _canonical(raw):
    """Sorted, merged, seam-split piece tuple from raw (start, length>=0) arcs."""
    pieces = []
    for a, b in raw:
        length = b - a
        if length < 0:
            raise ValueError("arc with negative length")
        if length >= 1:
            return ((Fraction(0), ONE),)
        a = frac(Fraction(a))
        b = a + length
        if b <= 1:
            pieces.append((a, b))
        else:
            pieces.append((a, ONE))
            pieces.append((Fraction(0), b - 1))
    pieces.sort()
    merged = []
    for a, b in pieces:
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    if len(merged) == 1 and merged[0] == (0, 1):
        return ((Fraction(0), ONE),)
    return tuple(merged)


class ArcSet:
    """Immutable finite union of closed arcs of R/Z."""

    __slots__ = ("_arcs",)

    def __init__(self, arcs=()):
        object.__setattr__(self, "_arcs", _canonical(arcs))

    def __setattr__(self, *a):
        raise AttributeError("ArcSet is immutable")

    @classmethod
    def _wrap(cls, pieces):
        obj = object.__new__(cls)
        object.__setattr__(obj, "_arcs", tuple(pieces))
        return obj

    @classmethod
    def empty(cls):
        return cls._wrap(())

    @classmethod
    def full(cls):
        return cls._wrap(((Fraction(0), ONE),))

    @classmethod
    def norm_constraint(cls, k, sigma):
        """The set {beta : ||k*beta|| <= sigma}: |k| arcs of radius sigma/|k|
        centered at the rationals j/|k|; total measure exactly 2*sigma."""
        sigma = Fraction(sigma)
        if not 0 < sigma < Fraction(1, 2):
            raise InvalidSigma(f"sigma must lie in (0, 1/2), got {sigma}")
        if k == 0:
            raise ValueError("k must be nonzero")
        k = abs(k)
        r = sigma / k
        return cls((Fraction(j, k) - r, Fraction(j, k) + r) for j in range(k))

    @property
    def arcs(self):
        """The canonical seam-split pieces (closed intervals in [0, 1])."""
        return self._arcs

    @property
    def is_empty(self):
        return not self._arcs

    @property
    def is_full(self):
        return self._arcs == ((0, 1),)

    def measure(self):
        return sum((b - a for a, b in self._arcs), Fraction(0))

    def circle_arcs(self):
        """Arcs rejoined across the seam, for display: list of (a, b) with
        b - a the arc length; a wrap arc has a < 0."""
        ps = list(self._arcs)
        if len(ps) >= 2 and ps[0][0] == 0 and ps[-1][1] == 1:
            first, last = ps[0], ps[-1]
            ps = [(last[0] - 1, first[1])] + ps[1:-1]
        return ps

    def __eq__(self, other):
        if not isinstance(other, ArcSet):
            return NotImplemented
        return self._arcs == other._arcs

    def __hash__(self):
        return hash(self._arcs)

    def __repr__(self):
        if self.is_full:
            return "ArcSet(full)"
        spans = ", ".join(f"[{a}, {b}]" for a, b in self.circle_arcs())
        return f"ArcSet({spans})" if spans else "ArcSet(empty)"

    def intersect(self, other):
        res = []
        A, B = self._arcs, other._arcs
        i = j = 0
        while i < len(A) and j < len(B):
            a1, b1 = A[i]
            a2, b2 = B[j]
            lo, hi = max(a1, a2), min(b1, b2)
            if lo <= hi:
                res.append((lo, hi))
            if b1 < b2:
                i += 1
            elif b2 < b1:
                j += 1
            else:
                i += 1
                j += 1
        return ArcSet._wrap(res)

    def union(self, other):
        return ArcSet(tuple(self._arcs) + tuple(other._arcs))

    def contains(self, other):
        """Set containment: every point of `other` lies in `self`."""
        A = self._arcs
        i = 0
        for a, b in other._arcs:
            while i < len(A) and A[i][1] < a:
                i += 1
            if i == len(A) or not (A[i][0] <= a and b <= A[i][1]):
                return False
        return True

    # --- point membership -------------------------------------------------

    def _unrolled_open(self):
        """Circle arcs unrolled to [0, 2) for interior tests."""
        base = self.circle_arcs()
        if self.is_full:
            return [(Fraction(-1), Fraction(2))]
        out = []
        for a, b in base:
            out.append((a, b))
            out.append((a + 1, b + 1))
        return out

    def classify_rational(self, x):
        """Membership of an exact rational point: IN, OUT or BOUNDARY."""
        x = frac(Fraction(x))
        if self.is_full:
            return Membership.IN
        for a, b in self._unrolled_open():
            if a < x < b:
                return Membership.IN
            if x == a or x == b:
                return Membership.BOUNDARY
        return Membership.OUT

    def classify(self, beta, max_precision=DEFAULT_MAX_BITS):
        """Certified membership of a CircleElement (or rational).

        Rational points are classified exactly; irrational points by
        enclosure refinement.  BOUNDARY only occurs for exact rational
        ties; an irrational point that cannot be separated from every
        endpoint below the precision cap raises UndecidableMembership.
        """
        if not isinstance(beta, CircleElement):
            return self.classify_rational(Fraction(beta))
        if beta.is_rational:
            return self.classify_rational(beta.rational)
        if self.is_full:
            return Membership.IN
        if self.is_empty:
            return Membership.OUT
        pieces = self._unrolled_open()
        bits = 64
        while True:
            lo, hi = beta.reduced_enclosure(bits)
            for a, b in pieces:
                if a < lo and hi < b:
                    return Membership.IN
            if all(hi < a or b < lo for a, b in pieces):
                return Membership.OUT
            if bits >= max_precision:
                raise UndecidableMembership(None, f"membership of {beta!r} undecidable")
            bits = min(2 * bits, max_precision)

    def __contains__(self, beta):
        return self.classify(beta) is not Membership.OUT


def neighborhoods(center_enclosures, radius):
    """Closed arcs of the given radius around enclosed centers.

    Each center comes as a rational interval [lo, hi]; the arc
    [lo - radius, hi + radius] contains the radius-neighborhood of the
    true center, with rational endpoints.
    """
    radius = Fraction(radius)
    return ArcSet((lo - radius, hi + radius) for lo, hi in center_enclosures)
