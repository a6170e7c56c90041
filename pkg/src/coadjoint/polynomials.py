"""Integer univariate polynomials: charpoly, root-square transforms, Sturm counts.

Coefficient lists run from the constant term upward; the zero polynomial is
the empty list. Everything is exact over the integers, with primitive-part
normalization (positive content removal) between remainder steps to bound
coefficient growth without touching signs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InputError

IntPoly = list[int]


def trim(p: Sequence[int]) -> IntPoly:
    q = list(p)
    while q and q[-1] == 0:
        q.pop()
    return q


def degree(p: Sequence[int]) -> int:
    return len(trim(p)) - 1


def poly_add(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_neg(p: Sequence[int]) -> IntPoly:
    return [-a for a in p]


def poly_sub(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def derivative(p: Sequence[int]) -> IntPoly:
    return trim([i * a for i, a in enumerate(p)][1:])


def content(p: Sequence[int]) -> int:
    c = 0
    for a in p:
        c = gcd(c, abs(a))
    return c


def primitive(p: Sequence[int]) -> IntPoly:
    """Divide by the positive content; the sign of every coefficient is kept."""
    p = trim(p)
    c = content(p)
    if c <= 1:
        return list(p)
    return [a // c for a in p]


def pseudo_rem(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    """Sign-true pseudo-remainder: rem(|lc(g)|^(deg f - deg g + 1) * f, g).

    Scaling by the absolute leading coefficient keeps every division step
    exact over the integers while preserving the sign of the remainder,
    which Sturm sign counting depends on.
    """
    f, g = trim(f), trim(g)
    if not g:
        raise InputError("pseudo-division by the zero polynomial")
    if len(f) < len(g):
        return list(f)
    d = g[-1]
    mult = abs(d) ** (len(f) - len(g) + 1)
    r = [a * mult for a in f]
    for i in range(len(f) - 1, len(g) - 2, -1):
        coeff = r[i]
        if coeff == 0:
            continue
        q, rem = divmod(coeff, d)
        if rem:
            raise AssertionError("pseudo-division step not exact")
        shift = i - (len(g) - 1)
        for j, b in enumerate(g):
            r[shift + j] -= q * b
    return trim(r[: len(g) - 1])


def poly_gcd(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = primitive(p), primitive(q)
    while b:
        a, b = b, primitive(pseudo_rem(a, b))
    if a and a[-1] < 0:
        a = poly_neg(a)
    return a


def squarefree_part(p: Sequence[int]) -> IntPoly:
    """p / gcd(p, p'), primitive (exact division by Gauss's lemma)."""
    p = primitive(p)
    if degree(p) <= 1:
        return list(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) == 0:
        return list(p)
    return primitive(_exact_div(p, g))


def _exact_div(f: Sequence[int], g: Sequence[int]) -> IntPoly:
    ff = [Fraction(a) for a in trim(f)]
    gg = trim(g)
    out = [Fraction(0)] * (len(ff) - len(gg) + 1)
    for i in range(len(ff) - 1, len(gg) - 2, -1):
        c = ff[i] / gg[-1]
        out[i - (len(gg) - 1)] = c
        if c:
            for j, b in enumerate(gg):
                ff[i - (len(gg) - 1) + j] -= c * b
    if any(x != 0 for x in ff[: len(gg) - 1]):
        raise AssertionError("polynomial division was not exact")
    result = []
    for c in out:
        if c.denominator != 1:
            raise AssertionError("quotient is not integral")
        result.append(int(c))
    return trim(result)


def sturm_chain(p: Sequence[int]) -> list[IntPoly]:
    chain = [primitive(p), primitive(derivative(p))]
    while chain[-1]:
        r = poly_neg(primitive(pseudo_rem(chain[-2], chain[-1])))
        if not r:
            break
        chain.append(r)
    return [c for c in chain if c]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def count_negative_roots(p: Sequence[int]) -> int:
    """Number of distinct real roots of p in (-inf, 0), by exact Sturm count."""
    q = trim(p)
    if not q:
        raise InputError("zero polynomial has no root count")
    while q and q[0] == 0:  # roots at 0 are not negative; strip them
        q = q[1:]
    q = squarefree_part(q)
    if degree(q) <= 0:
        return 0
    chain = sturm_chain(q)
    at_minus_inf = [_sign(c[-1]) * (-1) ** degree(c) for c in chain]
    at_zero = [_sign(c[0]) for c in chain]
    return _variations(at_minus_inf) - _variations(at_zero)


def charpoly_int(m: Sequence[Sequence[int]]) -> IntPoly:
    """Monic characteristic polynomial det(tI - m) of an integer matrix.

    Faddeev-LeVerrier recursion; all interior divisions are exact over Z.
    """
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [[0] * n for _ in range(n)]
    c_prev = 1
    for k in range(1, n + 1):
        # a <- m (a + c_prev I)
        b = [row[:] for row in a]
        for i in range(n):
            b[i][i] += c_prev
        a = [[sum(m[i][l] * b[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(a[i][i] for i in range(n))
        c_k, r = divmod(-tr, k)
        if r:
            raise AssertionError("Faddeev-LeVerrier division not exact")
        coeffs[n - k] = c_k
        c_prev = c_k
    return coeffs


def squares_of_roots(p: Sequence[int]) -> IntPoly:
    """The polynomial whose roots are the squares of the roots of p.

    Equals Res_t(p(t), u - t^2) for monic p, computed via the even/odd split
    p(t) = pe(t^2) + t po(t^2) and q(u) = (-1)^deg (pe^2 - u po^2).
    """
    p = trim(p)
    if not p:
        raise InputError("zero polynomial")
    pe = p[0::2]
    po = p[1::2]
    q = poly_sub(poly_mul(pe, pe), poly_mul([0, 1], poly_mul(po, po)))
    if degree(p) % 2 == 1:
        q = poly_neg(q)
    return q


def clear_denominators(p: Sequence[Fraction]) -> IntPoly:
    """Scale a rational polynomial by a positive integer to integer coefficients."""
    p = list(p)
    lcm = 1
    for c in p:
        c = Fraction(c)
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return trim([int(Fraction(c) * lcm) for c in p])
