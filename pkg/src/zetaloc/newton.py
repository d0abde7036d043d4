"""Exact Newton-polyhedron combinatorics on lattice points.

Points are integer tuples.  A support ``A`` is a set of exponents in
``Z^n``; for a coordinate subset ``I`` (0-based indices) the restricted
support ``A_I`` keeps the points vanishing outside ``I``.  Face normals are
primitive covectors with strictly positive entries on ``I``.

Nothing here uses floating point.  Vertex extraction runs a small exact
simplex method over ``Fraction``; facets are found by spanning hyperplanes
through vertex subsets; lattice volumes recurse over facets, each facet
being measured in the lattice induced on its hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, gcd
from typing import Iterable, Sequence

from .errors import DegenerateInputError, PreconditionError

__all__ = [
    "Covector",
    "FaceData",
    "restrict_support",
    "diagram_vertices",
    "m_value",
    "face_of",
    "pair_face_normals",
    "pair_faces",
    "normalized_volume",
    "mixed_volumes",
    "mixed_volume_sum",
    "kouchnirenko_mu",
    "lattice_volume",
]

Point = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Covector:
    """Primitive positive integer linear form supported on ``indices``."""

    indices: tuple
    weights: tuple

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "weights", w)
        if not idx or len(idx) != len(w):
            raise ValueError("covector needs one weight per index")
        if list(idx) != sorted(set(idx)):
            raise ValueError("covector indices must be strictly increasing")
        if any(x < 1 for x in w):
            raise ValueError(f"covector weights must be positive: {w}")
        if _content(w) != 1:
            raise ValueError(f"covector {w} is not primitive")

    @property
    def dim(self) -> int:
        return len(self.indices)

    def local(self, v: Sequence[int]) -> Point:
        """Coordinates of ``v`` on ``indices`` (``v`` may already be local)."""
        if len(v) == len(self.weights):
            return tuple(v)
        return tuple(v[i] for i in self.indices)

    def __call__(self, v: Sequence[int]) -> int:
        return _dot(self.weights, self.local(v))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.weights)) + ")"


@dataclass(frozen=True)
class FaceData:
    """A covector with the minima and minimizing faces of one or two supports."""

    covector: Covector
    mF: int
    mG: int | None
    verticesF: frozenset
    verticesG: frozenset | None

    @property
    def difference(self) -> int | None:
        return None if self.mG is None else self.mF - self.mG


# -- small exact linear algebra ------------------------------------------

def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _content(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def _primitive(v) -> tuple:
    g = _content(v)
    return tuple(x // g for x in v) if g else tuple(v)


def _det(rows) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _affine_rank(points) -> int:
    pts = list(points)
    if not pts:
        return -1
    p0 = pts[0]
    return _rank([tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]])


def _normal(vectors, dim: int) -> tuple:
    """Primitive integer vector orthogonal to ``dim - 1`` given vectors (0 if dependent)."""
    out = []
    for i in range(dim):
        minor = [[v[j] for j in range(dim) if j != i] for v in vectors]
        out.append((-1) ** i * _det(minor))
    return _primitive(out)


def _unimodular_with_first_row(b) -> list[list[int]]:
    """An integer matrix of determinant +-1 whose first row is the primitive ``b``."""
    return [list(row) for row in _unimodular_cached(tuple(b))]


@lru_cache(maxsize=None)
def _unimodular_cached(b) -> tuple:
    k = len(b)
    vec = list(b)
    # column operations U with b.U = e_1, then return U^{-1}
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    while True:
        nz = [i for i in range(k) if vec[i] != 0]
        if not nz:
            raise ValueError("zero vector has no unimodular completion")
        if len(nz) == 1:
            break
        p = min(nz, key=lambda i: abs(vec[i]))
        for j in nz:
            if j != p:
                q = vec[j] // vec[p]
                vec[j] -= q * vec[p]
                for r in range(k):
                    U[r][j] -= q * U[r][p]
    p = nz[0]
    if abs(vec[p]) != 1:
        raise ValueError(f"{tuple(b)} is not primitive")
    if vec[p] == -1:
        for r in range(k):
            U[r][p] = -U[r][p]
    for r in range(k):
        U[r][0], U[r][p] = U[r][p], U[r][0]
    return tuple(tuple(row) for row in _integer_inverse(U))


def _integer_inverse(M) -> list[list[int]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def _solve_coordinates(basis, x) -> tuple:
    """Integer coordinates of ``x`` in the lattice spanned by ``basis``."""
    k = len(basis)
    n = len(x)
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(x[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            raise ValueError("kernel basis vectors are linearly dependent")
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        raise ValueError("point does not lie in the span of the basis")
    y = [rows[i][k] for i in range(k)]
    if any(v.denominator != 1 for v in y):
        raise ValueError("basis does not generate the kernel lattice")
    return tuple(int(v) for v in y)


# -- exact feasibility LP -------------------------------------------------

def _in_hull(target, points, rays=()) -> bool:
    """Is ``target`` in conv(points) + cone(rays)?  Phase-I simplex, Bland's rule."""
    if not points:
        return False
    k = len(target)
    cols = [list(p) + [1] for p in points] + [list(r) + [0] for r in rays]
    rhs = list(target) + [1]
    nrows = k + 1
    m = len(cols)
    T = []
    for i in range(nrows):
        s = -1 if rhs[i] < 0 else 1
        T.append([Fraction(s * cols[j][i]) for j in range(m)]
                 + [Fraction(int(r == i)) for r in range(nrows)]
                 + [Fraction(s * rhs[i])])
    basis = [m + i for i in range(nrows)]
    ncol = m + nrows
    while True:
        in_basis = set(basis)
        art_rows = [i for i in range(nrows) if basis[i] >= m]
        enter = None
        for j in range(ncol):
            if j in in_basis:
                continue
            rc = (1 if j >= m else 0) - sum(T[i][j] for i in art_rows)
            if rc < 0:
                enter = j
                break
        if enter is None:
            break
        best = None
        for i in range(nrows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        r = best[1]
        pv = T[r][enter]
        T[r] = [x / pv for x in T[r]]
        for i in range(nrows):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[r])]
        basis[r] = enter
    return all(T[i][-1] == 0 for i in range(nrows) if basis[i] >= m)


def _probe_weights(k: int, big: int):
    yield (1,) * k
    for pattern in product((1, big), repeat=k):
        if 1 in pattern and big in pattern:
            yield pattern


def _unique_minimizers(pts, weights):
    found = set()
    for w in weights:
        vals = [_dot(w, p) for p in pts]
        lo = min(vals)
        hits = [p for p, v in zip(pts, vals) if v == lo]
        if len(hits) == 1:
            found.add(hits[0])
    return found


@lru_cache(maxsize=4096)
def _newton_vertices(pts: frozenset) -> tuple:
    """Vertices of conv(pts) + R^k_{>=0}, sorted."""
    pts = sorted(pts)
    if not pts:
        return ()
    k = len(pts[0])
    if k == 0:
        return (pts[0],)
    # a point dominated coordinatewise by another is never a vertex
    cand = [p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts)]
    rays = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    big = 1 + sum(max(p[i] for p in cand) for i in range(k))
    known = _unique_minimizers(cand, _probe_weights(k, big))
    verts = []
    for v in cand:
        if v in known:
            verts.append(v)
            continue
        core = [q for q in known if q != v]
        if core and _in_hull(v, core, rays):
            continue
        if not _in_hull(v, [q for q in cand if q != v], rays):
            verts.append(v)
            known.add(v)
    return tuple(sorted(verts))


@lru_cache(maxsize=4096)
def _polytope_vertices(pts: frozenset) -> tuple:
    pts = sorted(pts)
    if len(pts) <= 2:
        return tuple(pts)
    k = len(pts[0])
    big = 1 + sum(max(p[i] for p in pts) - min(p[i] for p in pts) for i in range(k))
    weights = []
    for pattern in product((-big, -1, 1, big), repeat=k):
        weights.append(pattern)
    known = _unique_minimizers(pts, weights)
    verts = []
    for v in pts:
        if v in known:
            verts.append(v)
            continue
        core = [q for q in known if q != v]
        if core and _in_hull(v, core):
            continue
        if not _in_hull(v, [q for q in pts if q != v]):
            verts.append(v)
            known.add(v)
    return tuple(sorted(verts))


# -- facets ---------------------------------------------------------------

def _compact_facets(verts: Sequence[Point]) -> list[tuple]:
    """Primitive strictly positive normals of compact facets of conv(verts) + R^k_{>=0}."""
    if not verts:
        return []
    k = len(verts[0])
    if k == 1:
        return [(1,)]
    found = set()
    for subset in combinations(verts, k):
        s0 = subset[0]
        vecs = [tuple(a - b for a, b in zip(s, s0)) for s in subset[1:]]
        nrm = _normal(vecs, k)
        if not any(nrm):
            continue
        if all(x < 0 for x in nrm):
            nrm = tuple(-x for x in nrm)
        elif not all(x > 0 for x in nrm):
            continue
        if nrm in found:
            continue
        m = _dot(nrm, s0)
        if all(_dot(nrm, v) >= m for v in verts):
            found.add(nrm)
    return sorted(found)


def _polytope_facets(verts: Sequence[Point]) -> list[tuple]:
    """(normal, offset) for each facet of a full-dimensional polytope; normal.v >= offset inside."""
    D = len(verts[0])
    found = {}
    for subset in combinations(verts, D):
        s0 = subset[0]
        vecs = [tuple(a - b for a, b in zip(s, s0)) for s in subset[1:]]
        nrm = _normal(vecs, D)
        if not any(nrm):
            continue
        c = _dot(nrm, s0)
        vals = [_dot(nrm, v) - c for v in verts]
        if all(x >= 0 for x in vals):
            found.setdefault(nrm, c)
        elif all(x <= 0 for x in vals):
            found.setdefault(tuple(-x for x in nrm), -c)
    return sorted(found.items())


# -- volumes --------------------------------------------------------------

def _full_volume(points: Sequence[Point]) -> int:
    """D! times the Euclidean volume of conv(points) in Z^D (0 if not full-dimensional)."""
    pts = sorted(set(points))
    D = len(pts[0])
    if D == 0:
        return 1
    if D == 1:
        return max(p[0] for p in pts) - min(p[0] for p in pts)
    if _affine_rank(pts) < D:
        return 0
    verts = _polytope_vertices(frozenset(pts))
    p0 = verts[0]
    total = 0
    for nrm, c in _polytope_facets(verts):
        h = _dot(nrm, p0) - c
        if h == 0:
            continue
        facet = [v for v in verts if _dot(nrm, v) == c]
        total += h * lattice_volume(facet, nrm)
    return total


def lattice_volume(points: Sequence[Point], normal: Sequence[int], basis=None) -> int:
    """Normalized volume of conv(points) inside the hyperplane lattice ``normal . x = const``.

    ``normal`` is any primitive integer vector.  The points are mapped into
    ``Z^{k-1}`` through a unimodular completion of ``normal`` (or through the
    given kernel ``basis``) and the full-dimensional normalized volume is taken.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        raise PreconditionError("empty point set")
    normal = tuple(normal)
    k = len(normal)
    levels = {_dot(normal, p) for p in pts}
    if len(levels) != 1:
        raise PreconditionError("points do not lie on a common hyperplane of the covector")
    if _content(normal) != 1:
        raise PreconditionError(f"{normal} is not primitive")
    if k == 1:
        return 1
    p0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts]
    if basis is None:
        W = _unimodular_with_first_row(normal)
        coords = [tuple(_dot(row, d) for row in W[1:]) for d in diffs]
    else:
        if len(basis) != k - 1:
            raise ValueError("kernel basis must have k-1 vectors")
        if any(_dot(normal, b) != 0 for b in basis):
            raise ValueError("basis vectors must lie in the kernel")
        # the maximal minors of a kernel basis are index * normal; index 1 means a lattice basis
        minors = [_det([[row[j] for j in range(k) if j != i] for row in basis]) for i in range(k)]
        if _content(minors) != 1:
            raise ValueError("basis does not span the kernel lattice")
        coords = [_solve_coordinates(basis, d) for d in diffs]
    return _full_volume(coords)


def _as_local(points: Iterable[Sequence[int]], a: Covector) -> list[Point]:
    return [a.local(p) for p in points]


def normalized_volume(vertices: Iterable[Sequence[int]], a: Covector, basis=None) -> int:
    """Normalized (|I|-1)-volume of conv(vertices) in the lattice induced on ``a . x = m``.

    >>> normalized_volume([(2, 0, 0), (0, 4, 0), (1, 0, 3)], Covector((0, 1, 2), (6, 3, 2)))
    2
    """
    return lattice_volume(_as_local(vertices, a), a.weights, basis=basis)


def mixed_volumes(Fface, Gface, a: Covector) -> list[int]:
    """Normalized mixed volumes ``V_j`` of two parallel faces.

    Uses ``nu(lam*F + G) = sum_j C(d, j) V_j lam^j`` with ``d = |I| - 1``,
    sampled at ``lam = 0..d`` and solved exactly.
    """
    F = _as_local(Fface, a)
    G = _as_local(Gface, a)
    if not F or not G:
        raise PreconditionError("faces must be nonempty")
    for face in (F, G):
        if len({_dot(a.weights, p) for p in face}) != 1:
            raise PreconditionError("face does not lie on a level set of the covector")
    d = a.dim - 1
    if d == 0:
        return [1]
    Fv = _polytope_vertices(frozenset(F))
    Gv = _polytope_vertices(frozenset(G))
    samples = []
    for lam in range(d + 1):
        pts = {tuple(lam * x + y for x, y in zip(u, w)) for u in Fv for w in Gv}
        samples.append(lattice_volume(sorted(pts), a.weights))
    coeffs = _interpolate(samples)
    out = []
    for j, c in enumerate(coeffs):
        v = c / comb(d, j)
        if v.denominator != 1 or v < 0:
            raise DegenerateInputError(
                f"mixed volume V_{j} = {v} is not a nonnegative integer for covector {a}"
            )
        out.append(int(v))
    return out


def mixed_volume_sum(Fface, Gface, a: Covector) -> int:
    """Sum of all normalized mixed volumes of the two faces."""
    return sum(mixed_volumes(Fface, Gface, a))


def _interpolate(samples: list[int]) -> list[Fraction]:
    """Coefficients (ascending) of the polynomial through (j, samples[j])."""
    n = len(samples)
    rows = [[Fraction(x ** j) for j in range(n)] + [Fraction(samples[x])] for x in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if rows[r][c] != 0)
        rows[c], rows[piv] = rows[piv], rows[c]
        pv = rows[c][c]
        rows[c] = [v / pv for v in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return [rows[j][n] for j in range(n)]


# -- supports -------------------------------------------------------------

def restrict_support(A: Iterable[Sequence[int]], I: Iterable[int]) -> frozenset:
    """Points of ``A`` vanishing outside ``I`` (full coordinates kept)."""
    keep = set(I)
    return frozenset(tuple(v) for v in A if all(x == 0 for j, x in enumerate(v) if j not in keep))


def _local_support(A, I) -> tuple[tuple, dict]:
    idx = tuple(sorted(set(I)))
    if not idx:
        raise PreconditionError("coordinate subset must be nonempty")
    restricted = restrict_support(A, idx)
    if not restricted:
        raise PreconditionError(f"support restricted to {list(idx)} is empty")
    local = {tuple(v[i] for i in idx): v for v in restricted}
    return idx, local


def diagram_vertices(A: Iterable[Sequence[int]], I: Iterable[int]) -> frozenset:
    """Vertices of the Newton polyhedron of ``A_I`` (returned in full coordinates)."""
    A = [tuple(v) for v in A]
    idx, local = _local_support(A, I)
    return frozenset(local[v] for v in _newton_vertices(frozenset(local)))


def m_value(A: Iterable[Sequence[int]], a: Covector) -> int:
    idx, local = _local_support(A, a.indices)
    return min(_dot(a.weights, v) for v in local)


def face_of(A: Iterable[Sequence[int]], a: Covector) -> frozenset:
    """Points of ``A_I`` where the covector attains its minimum (full coordinates)."""
    idx, local = _local_support(A, a.indices)
    m = min(_dot(a.weights, v) for v in local)
    return frozenset(full for v, full in local.items() if _dot(a.weights, v) == m)


def pair_face_normals(F, G, I) -> list[Covector]:
    """Covectors whose joint face ``Delta_a(F_I) + Delta_a(G_I)`` has dimension ``|I| - 1``.

    These are the strictly positive primitive facet normals of the Minkowski
    sum of the two Newton polyhedra, listed in lexicographic order.  For a
    single support pass ``G = {0}``.
    """
    F = [tuple(v) for v in F]
    G = [tuple(v) for v in G]
    idx, lf = _local_support(F, I)
    _, lg = _local_support(G, idx)
    return [Covector(idx, w) for w in _pair_normals(frozenset(lf), frozenset(lg))]


@lru_cache(maxsize=4096)
def _pair_normals(lf: frozenset, lg: frozenset) -> tuple:
    vf = _newton_vertices(lf)
    vg = _newton_vertices(lg)
    summed = frozenset(tuple(x + y for x, y in zip(u, w)) for u in vf for w in vg)
    return tuple(_compact_facets(_newton_vertices(summed)))


def pair_faces(F, G, I) -> list[FaceData]:
    """``FaceData`` for every covector of :func:`pair_face_normals`."""
    out = []
    for a in pair_face_normals(F, G, I):
        out.append(FaceData(
            covector=a,
            mF=m_value(F, a),
            mG=m_value(G, a),
            verticesF=face_of(F, a),
            verticesG=face_of(G, a),
        ))
    return out


def _is_convenient(A, n) -> bool:
    for i in range(n):
        if not any(v[i] > 0 and all(v[j] == 0 for j in range(n) if j != i) for v in A):
            return False
    return True


def kouchnirenko_mu(A: Iterable[Sequence[int]]) -> int:
    """Milnor number of a convenient nondegenerate germ from its support.

    Alternating sum over coordinate subsets of the normalized volumes of the
    regions cut off below the Newton diagram, plus ``(-1)^n``.
    """
    A = [tuple(v) for v in A]
    if not A:
        raise PreconditionError("empty support")
    n = len(A[0])
    if not _is_convenient(A, n):
        raise PreconditionError("support is not convenient")
    mu = (-1) ** n
    for k in range(1, n + 1):
        for I in combinations(range(n), k):
            local = frozenset(tuple(v[i] for i in I) for v in restrict_support(A, I))
            verts = _newton_vertices(local)
            region = 0
            origin = (0,) * k
            for nrm in _compact_facets(verts):
                m = min(_dot(nrm, v) for v in verts)
                face = [v for v in verts if _dot(nrm, v) == m]
                region += _full_volume(face + [origin])
            mu += (-1) ** (n - k) * region
    return mu
