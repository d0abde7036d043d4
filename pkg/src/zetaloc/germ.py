"""Zeta functions of local germ data.

``milnor_zeta`` is Varchenko's formula for a Newton-nondegenerate germ.
``pair_zeta0`` is the Newton-diagram formula for the zero fibre of the
meromorphic germ ``f/g`` attached to a pencil ``f + sigma*g``:

    prod_I prod_a (1 - t^(m_a(f_I) - m_a(g_I)))^((-1)^(|I|-1) * sum_j V_j)

over coordinate subsets ``I`` on which both ``f`` and ``g`` survive and over
covectors ``a`` whose joint face is a facet, keeping only positive
differences; ``V_j`` are the normalized mixed volumes of the two faces.
``family_zeta_at_point`` assembles the local zeta of the family from these,
and ``hat_family_zeta`` divides out the boundary hyperplane contribution.

Nondegeneracy is assumed, never checked.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .newton import face_of, m_value, mixed_volume_sum, normalized_volume, pair_face_normals
from .poly import GermFamily, Poly, restrict_to_subset, set_var_zero, support
from .zeta import CycloProd, cyclo, one

__all__ = [
    "Case",
    "LocalZetaResult",
    "FragileSupportWarning",
    "milnor_zeta",
    "pair_zeta0",
    "pair_zeta0_by_subset",
    "family_zeta_at_point",
    "hat_family_zeta",
]


class Case(str, enum.Enum):
    EMPTY = "empty"
    CONSTANT_FAMILY = "constant_family"
    MILNOR = "milnor"
    PAIR_WITH_INDETERMINACY = "pair_with_indeterminacy"

    def __str__(self) -> str:
        return self.value


class FragileSupportWarning(UserWarning):
    """A support sits inside a coordinate hyperplane section; the diagram formula may not apply."""


@dataclass(frozen=True)
class LocalZetaResult:
    zeta: CycloProd
    chi: int
    case_tag: Case

    def __post_init__(self):
        if self.chi != self.zeta.degree:
            raise ValueError(f"chi={self.chi} differs from degree {self.zeta.degree}")

    @classmethod
    def of(cls, zeta: CycloProd, case_tag: Case) -> LocalZetaResult:
        return cls(zeta, zeta.degree, Case(case_tag))

    def __str__(self) -> str:
        return f"{self.zeta}  chi={self.chi}  case={self.case_tag}"


def _subsets(n: int):
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def _warn_if_fragile(p: Poly, name: str) -> None:
    # every monomial divisible by x_j: the germ vanishes on a whole coordinate hyperplane
    if p.nvars < 2:
        return
    for j in range(p.nvars):
        if all(e[j] > 0 for e, _ in p.items()):
            warnings.warn(
                f"{name} is divisible by variable {j}; nondegeneracy is assumed, not checked",
                FragileSupportWarning,
                stacklevel=3,
            )
            return


def milnor_zeta(f: Poly) -> CycloProd:
    """Varchenko's formula for the classical monodromy zeta function of ``f`` at 0."""
    if f.is_zero():
        raise PreconditionError("milnor_zeta needs a nonzero germ")
    if not f.vanishes_at_origin():
        raise PreconditionError("milnor_zeta needs f(0) = 0")
    _warn_if_fragile(f, "f")
    table: dict[int, int] = {}
    for I in _subsets(f.nvars):
        fI = restrict_to_subset(f, I)
        if fI.is_zero():
            continue
        A = support(fI)
        sign = (-1) ** (len(I) - 1)
        origin = [(0,) * f.nvars]
        for a in pair_face_normals(A, origin, I):
            m = m_value(A, a)
            table[m] = table.get(m, 0) + sign * normalized_volume(face_of(A, a), a)
    return CycloProd(table)


def pair_zeta0_by_subset(f: Poly, g: Poly) -> dict[tuple, CycloProd]:
    """Contribution of each coordinate subset on which both ``f`` and ``g`` survive."""
    if f.nvars != g.nvars:
        raise PreconditionError("f and g must have the same number of variables")
    if f.is_zero() or g.is_zero():
        raise PreconditionError("pair_zeta0 needs nonzero f and g")
    if not f.vanishes_at_origin():
        raise PreconditionError("pair_zeta0 needs f(0) = 0")
    out = {}
    for I in _subsets(f.nvars):
        fI = restrict_to_subset(f, I)
        gI = restrict_to_subset(g, I)
        if fI.is_zero() or gI.is_zero():
            continue
        F, G = support(fI), support(gI)
        sign = (-1) ** (len(I) - 1)
        table: dict[int, int] = {}
        for a in pair_face_normals(F, G, I):
            D = m_value(F, a) - m_value(G, a)
            if D <= 0:
                # belongs to the zeta function at infinity of f/g
                continue
            table[D] = table.get(D, 0) + sign * mixed_volume_sum(face_of(F, a), face_of(G, a), a)
        out[I] = CycloProd(table)
    return out


def pair_zeta0(f: Poly, g: Poly) -> CycloProd:
    """Zeta function of the zero Milnor fibre of ``f/g`` from the two Newton diagrams.

    A unit ``g`` is accepted and reduces the formula to :func:`milnor_zeta`.
    """
    out = one()
    for z in pair_zeta0_by_subset(f, g).values():
        out = out * z
    return out


def family_zeta_at_point(fam: GermFamily) -> LocalZetaResult:
    """Local zeta function of ``f + sigma*g`` at the origin, for every shape of input."""
    f, g = fam.f, fam.g
    if f.is_zero() and g.is_zero():
        return LocalZetaResult.of(cyclo(1), Case.CONSTANT_FAMILY)
    if f.is_zero():
        z = cyclo(1) if g.vanishes_at_origin() else one()
        return LocalZetaResult.of(z, Case.CONSTANT_FAMILY)
    if g.is_zero():
        z = cyclo(1) if f.vanishes_at_origin() else one()
        return LocalZetaResult.of(z, Case.CONSTANT_FAMILY)
    if not f.vanishes_at_origin():
        return LocalZetaResult.of(one(), Case.EMPTY)
    if not g.vanishes_at_origin():
        return LocalZetaResult.of(milnor_zeta(f), Case.MILNOR)
    return LocalZetaResult.of(pair_zeta0(f, g) * cyclo(1), Case.PAIR_WITH_INDETERMINACY)


def hat_family_zeta(fam: GermFamily, boundary_var: int) -> LocalZetaResult:
    """Local family zeta divided by that of its restriction to ``x_boundary_var = 0``.

    The case tag is the one of the unrestricted family.
    """
    full = family_zeta_at_point(fam)
    boundary = family_zeta_at_point(fam.map(set_var_zero, boundary_var))
    return LocalZetaResult.of(full.zeta / boundary.zeta, full.case_tag)
