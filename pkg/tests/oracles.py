"""Independent reference computations used by the tests.

None of these call into the code paths they check.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, product
from math import gcd

import sympy


def divisor(z):
    """Zeros minus poles on the unit circle of prod (1-t^k)^e, keyed by angle/2pi in [0,1)."""
    out = Counter()
    for k, e in z.items():
        for j in range(k):
            out[Fraction(j, k)] += e
    return {a: m for a, m in out.items() if m}


def brieskorn_divisor(exponents):
    """Divisor of the monodromy zeta function of x1^a1 + ... + xn^an from its eigenvalues.

    H_0 carries the eigenvalue 1 (sign +1); H_{n-1} carries exp(2 pi i sum j_i/a_i),
    1 <= j_i < a_i, with sign (-1)^(n-1).
    """
    n = len(exponents)
    out = Counter({Fraction(0): 1})
    sign = (-1) ** (n - 1)
    for js in product(*[range(1, a) for a in exponents]):
        angle = sum(Fraction(j, a) for j, a in zip(js, exponents))
        out[angle - (angle.numerator // angle.denominator)] += sign
    return {a: m for a, m in out.items() if m}


def homogeneous_divisor(n, d):
    """Same for a generic homogeneous form of degree d: eigenvalues exp(2 pi i sum j_i/d)."""
    return brieskorn_divisor([d] * n)


def series_via_sympy(z, N):
    t = sympy.symbols("t")
    expr = sympy.Integer(1)
    for k, e in z.items():
        expr *= (1 - t ** k) ** e
    s = sympy.series(expr, t, 0, N + 1).removeO()
    poly = sympy.Poly(s, t)
    return [int(poly.coeff_monomial(t ** i)) for i in range(N + 1)]


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def _normal_sympy(vectors, k):
    # closed forms for the small cases, sympy for the rest
    if k == 2:
        (u,) = vectors
        return _primitive((-u[1], u[0])) if any(u) else None
    if k == 3:
        u, v = vectors
        c = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        return _primitive(c) if any(c) else None
    M = sympy.Matrix(vectors)
    ns = M.nullspace()
    if len(ns) != 1:
        return None
    v = ns[0]
    den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
    return _primitive([int(x * den) for x in v])


def _rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                q = rows[i][c] / rows[rank][c]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def brute_force_normals(F, G, I):
    """Positive primitive covectors with dim(face_a(F_I) + face_a(G_I)) = |I| - 1.

    Candidates come from every (|I|-1)-subset of difference vectors of the
    full Minkowski sum of point sets; the face dimension is then checked.
    """
    I = tuple(sorted(I))
    k = len(I)

    def local(A):
        return {tuple(v[i] for i in I) for v in A if all(x == 0 for j, x in enumerate(v) if j not in I)}

    lf, lg = local(F), local(G)
    S = sorted({tuple(a + b for a, b in zip(u, w)) for u in lf for w in lg})
    if k == 1:
        return [(1,)]
    diffs = set()
    for p, q in combinations(S, 2):
        dvec = _primitive(tuple(a - b for a, b in zip(p, q)))
        if dvec[next(i for i, x in enumerate(dvec) if x)] < 0:
            dvec = tuple(-x for x in dvec)
        diffs.add(dvec)
    found = set()
    for vecs in combinations(sorted(diffs), k - 1):
        nrm = _normal_sympy(vecs, k)
        if nrm is None:
            continue
        if all(x < 0 for x in nrm):
            nrm = tuple(-x for x in nrm)
        if not all(x > 0 for x in nrm) or nrm in found:
            continue
        vals = [sum(a * b for a, b in zip(nrm, p)) for p in S]
        m = min(vals)
        face = [p for p, v in zip(S, vals) if v == m]
        if len(face) >= k and _rank([[a - b for a, b in zip(p, face[0])] for p in face[1:]]) == k - 1:
            found.add(nrm)
    return sorted(found)


def milnor_number_brieskorn(exponents):
    out = 1
    for a in exponents:
        out *= a - 1
    return out


def example1_closed_form(d0, d):
    """(1-t)(1-t^|d0-d|)^(1-d), or (1-t) when d0 = d, as a factor table."""
    if d0 == d:
        return {1: 1}
    out = Counter({1: 1})
    out[abs(d0 - d)] += 1 - d
    return dict(out)


def example3_exponent(n, d0, d):
    hi, lo = max(d0, d), min(d0, d)
    num = (-1) ** (n - 1) * ((hi - 1) ** n - (lo - 1) ** n)
    assert num % (hi - lo) == 0
    return num // (hi - lo)


def example4_exponent(n, d0):
    return (1 - d0) ** (n - 1)
