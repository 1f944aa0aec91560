"""Countable subgroups of the circle given by enumerated generators.

A GroupSpec materializes three views of H = <alpha_1, ..., alpha_t>:

* coefficient balls {sum k_i alpha_i : |k_i| <= M} (deduplicated),
* a canonical enumeration of the nonzero elements of H, one per sign
  pair {x, -x}, produced shell by shell in growing coefficient bound
  (for a single generator this is alpha, 2*alpha, 3*alpha, ...),
* the integer relation lattice of the generator tuple.

Norms are even, so enumerating one element per sign pair loses nothing
downstream; it keeps stage tuples small and stage guarantees sharp.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .circle import ZERO, CircleElement
from .errors import BudgetExceeded
from .lattice import express_in_subgroup, order_modulo, relation_lattice

BALL_CAP = 2_000_000  # combination count guard


def combination(elements, vec):
    x = ZERO
    for c, el in zip(vec, elements):
        if c:
            x = x + c * el
    return x


def group_ball(elements, M):
    """The set {sum k_i el_i mod 1 : |k_i| <= M}, deduplicated."""
    elements = tuple(elements)
    t = len(elements)
    if t == 0 or M == 0:
        return {ZERO}
    if (2 * M + 1) ** t > BALL_CAP:
        raise BudgetExceeded(f"coefficient ball (2*{M}+1)^{t} exceeds cap")
    return {combination(elements, vec) for vec in product(range(-M, M + 1), repeat=t)}


def _sign_key(x: CircleElement):
    k1 = (x.rational, tuple((s.name, c) for s, c in x.coeffs))
    y = -x
    k2 = (y.rational, tuple((s.name, c) for s, c in y.coeffs))
    return min(k1, k2)


def _shell_vectors(t, M):
    """Coefficient vectors with max-norm exactly M, first nonzero entry
    positive, in lexicographic order."""
    for vec in product(range(-M, M + 1), repeat=t):
        if max(map(abs, vec)) != M:
            continue
        lead = next((c for c in vec if c), 0)
        if lead > 0:
            yield vec


@dataclass(frozen=True)
class GroupSpec:
    """Enumerated generators of a countable subgroup H of R/Z."""

    generators: tuple

    def __init__(self, generators):
        gens = tuple(
            g if isinstance(g, CircleElement) else CircleElement(Fraction(g))
            for g in generators
        )
        object.__setattr__(self, "generators", gens)

    @property
    def is_finite(self):
        return all(g.is_rational for g in self.generators)

    def order(self):
        """|H| for finite H (all-rational generators), else None."""
        if not self.is_finite:
            return None
        L = 1
        for g in self.generators:
            L = lcm(L, g.rational.denominator)
        d = L
        for g in self.generators:
            d = gcd(d, int(g.rational * L))
        return L // d

    def torsion_exponent(self):
        """Exponent of H for finite H (cyclic, so equal to the order)."""
        return self.order()

    def relation_lattice(self):
        return relation_lattice(self.generators)

    def contains(self, beta: CircleElement):
        return express_in_subgroup(self.generators, beta) is not None

    def order_of(self, beta: CircleElement):
        """Order of beta modulo H: 0 if infinite, 1 iff beta is in H."""
        return order_modulo(self.generators, beta)

    def elements(self):
        """Lazy canonical enumeration of H minus 0, one per sign pair.

        For finite H the enumeration terminates once a whole coefficient
        shell brings nothing new (the ball then equals H).
        """
        t = len(self.generators)
        if t == 0:
            return
        seen = {_sign_key(ZERO)}
        M = 1
        while True:
            fresh = False
            for vec in _shell_vectors(t, M):
                x = combination(self.generators, vec)
                if x.is_zero:
                    continue
                key = _sign_key(x)
                if key in seen:
                    continue
                seen.add(key)
                fresh = True
                yield x
            if not fresh and self.is_finite:
                return
            if (2 * (M + 1) + 1) ** t > BALL_CAP:
                raise BudgetExceeded("element enumeration shell exceeds cap")
            M += 1

    def element_prefix(self, count):
        """The first `count` enumeration elements (fewer for finite H)."""
        out = []
        for x in self.elements():
            out.append(x)
            if len(out) >= count:
                break
        return out

    def labels(self):
        return [g.label() for g in self.generators]
