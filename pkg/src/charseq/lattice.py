"""Exact integer linear algebra for relation lattices.

Everything here runs on plain Python integers: row Hermite reduction
with a unimodular transform gives integer kernels of integer matrices,
and the kernel of the scaled coefficient matrix of a generator tuple is
exactly its lattice of integer relations
{h : h_1*alpha_1 + ... + h_t*alpha_t is an integer}.
"""

from fractions import Fraction
from math import gcd, lcm

from .circle import CircleElement


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def row_echelon_transform(A):
    """Integer row echelon form with transform: returns (H, U, rank) with
    U unimodular, U*A = H, the first `rank` rows of H nonzero with
    strictly increasing pivot columns, the rest zero rows."""
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = _identity(m)
    r = 0
    for c in range(n):
        while True:
            rows = [i for i in range(r, m) if H[i][c] != 0]
            if not rows:
                break
            i0 = min(rows, key=lambda i: abs(H[i][c]))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    if q:
                        H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                        U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0 and all(H[i][c] == 0 for i in range(r + 1, m)):
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            r += 1
        if r == m:
            break
    return H, U, r


def left_kernel_basis(A):
    """Basis of the lattice {h in Z^m : h*A = 0}; rows are a full basis
    (the kernel is a direct summand, so no saturation step is needed)."""
    m = len(A)
    H, U, rank = row_echelon_transform(A)
    return hermite_normal_form([U[i] for i in range(rank, m)])


def hermite_normal_form(rows):
    """Row-style HNF of the lattice spanned by `rows`: unique canonical
    basis with positive pivots and reduced entries above them."""
    if not rows:
        return []
    H, _, rank = row_echelon_transform(rows)
    H = H[:rank]
    # reduce entries above each pivot
    pivots = []
    for row in H:
        pivots.append(next(j for j, a in enumerate(row) if a))
    for i in reversed(range(rank)):
        p = pivots[i]
        for k in range(i):
            q = H[k][p] // H[i][p]
            if q:
                H[k] = [a - q * b for a, b in zip(H[k], H[i])]
    return H


def solve_left(A, c):
    """One integer solution y of y*A = c, or None.

    A is an m x n integer matrix, c an integer n-vector.
    """
    m = len(A)
    H, U, rank = row_echelon_transform(A)
    w = [0] * m
    rem = list(map(int, c))
    for i in range(rank):
        p = next(j for j, a in enumerate(H[i]) if a)
        if rem[p] % H[i][p]:
            return None
        q = rem[p] // H[i][p]
        w[i] = q
        if q:
            rem = [a - q * b for a, b in zip(rem, H[i])]
    if any(rem):
        return None
    y = [0] * m
    for i in range(rank):
        if w[i]:
            y = [a + w[i] * b for a, b in zip(y, U[i])]
    return y


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"scaling did not clear denominator of {x}")
    return x.numerator


def _scaled_rows(elements, symbols, scale):
    """Integer row per element: scaled symbol coefficients then the
    scaled rational part."""
    rows = []
    for el in elements:
        coeffs = dict(el.coeffs)
        row = [_as_int(scale * coeffs.get(s, Fraction(0))) for s in symbols]
        row.append(_as_int(scale * el.rational))
        rows.append(row)
    return rows


def _common_scale(elements):
    symbols = sorted({s for el in elements for s, _ in el.coeffs}, key=lambda s: s.name)
    d = 1
    for el in elements:
        d = lcm(d, el.rational.denominator)
        for _, c in el.coeffs:
            d = lcm(d, c.denominator)
    return symbols, d


def relation_lattice(elements):
    """HNF basis of {h in Z^t : sum h_i * elements_i is an integer}.

    The integer slack of the rational part is an extra kernel variable
    that projects away injectively, so the projected rows stay a basis.
    """
    elements = tuple(elements)
    t = len(elements)
    if t == 0:
        return []
    symbols, d = _common_scale(elements)
    rows = _scaled_rows(elements, symbols, d)
    slack = [0] * len(symbols) + [d]
    kernel = left_kernel_basis(rows + [slack])
    return hermite_normal_form([v[:t] for v in kernel])


def order_modulo(generators, beta):
    """Order of beta in T modulo the subgroup generated by `generators`:
    the positive generator m of {c : c*beta in <generators> + Z}, or 0
    when no positive multiple of beta falls in the subgroup."""
    lat = relation_lattice(tuple(generators) + (beta,))
    m = 0
    for row in lat:
        m = gcd(m, row[-1])
    return m


def express_in_subgroup(generators, beta):
    """Integer coefficients x with sum x_i * generators_i = beta mod 1,
    or None when beta is outside the subgroup."""
    generators = tuple(generators)
    if not generators:
        return [] if beta.is_zero else None
    symbols, d = _common_scale(generators + (beta,))
    rows = _scaled_rows(generators, symbols, d)
    slack = [0] * len(symbols) + [d]
    target = _scaled_rows((beta,), symbols, d)[0]
    y = solve_left(rows + [slack], target)
    if y is None:
        return None
    return y[:-1]
