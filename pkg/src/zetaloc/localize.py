"""Euler-characteristic integration of stratified local zeta data.

A stratification is plain data: a list of strata, each with an Euler
characteristic and the local zeta function common to its points.  Nothing
checks that the strata really partition the space or that the local zeta
function is constant along them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import ParseError, PreconditionError
from .zeta import CycloProd, one, parse_zeta

__all__ = [
    "Stratum",
    "StratifiedProblem",
    "integrate",
    "assemble_global",
    "chi_projective_space",
    "chi_smooth_hypersurface",
    "chi_complete_intersection",
    "chi_transversal_complement",
    "parse_strata",
    "format_strata",
]


@dataclass(frozen=True)
class Stratum:
    label: str
    chi: int
    zeta: CycloProd

    def __post_init__(self):
        if not self.label or any(c.isspace() for c in self.label):
            raise ValueError(f"stratum label must be a nonempty word, got {self.label!r}")

    def line(self) -> str:
        return f"stratum {self.label} chi={self.chi} zeta={self.zeta}"


def _check_labels(strata, where):
    seen = set()
    for s in strata:
        if s.label in seen:
            raise ValueError(f"duplicate stratum label {s.label!r} in {where}")
        seen.add(s.label)


@dataclass(frozen=True)
class StratifiedProblem:
    """Strata of the affine zero set and of its trace on the hyperplane at infinity."""

    affine: tuple = field(default_factory=tuple)
    infinity: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "affine", tuple(self.affine))
        object.__setattr__(self, "infinity", tuple(self.infinity))
        _check_labels(self.affine, "affine")
        _check_labels(self.infinity, "infinity")


def integrate(strata) -> CycloProd:
    """``prod (zeta_S)^{chi(S)}`` over the strata."""
    out = one()
    for s in strata:
        out = out * s.zeta ** s.chi
    return out


def assemble_global(problem: StratifiedProblem) -> CycloProd:
    """Zeta function of the family: affine integral times the integral at infinity.

    The Euler characteristic of the generic fibre is the degree of the result.
    """
    return integrate(problem.affine) * integrate(problem.infinity)


# -- Euler characteristics of projective strata -------------------------

def chi_projective_space(m: int) -> int:
    if m < 0:
        raise PreconditionError("dimension must be nonnegative")
    return m + 1


def chi_smooth_hypersurface(d: int, m: int) -> int:
    """Euler characteristic of a smooth degree-``d`` hypersurface in CP^m."""
    if d < 1 or m < 1:
        raise PreconditionError("need d >= 1 and m >= 1")
    num = (1 - d) ** (m + 1) - 1
    assert num % d == 0
    return m + 1 + num // d


def _series_coeff(degrees, m, r) -> int:
    """Coefficient of h^r in (1+h)^(m+1) / prod_i (1 + d_i h)."""
    if r < 0:
        return 0
    # 1/(1+d h) = sum (-d)^j h^j
    inv = [1] + [0] * r
    for d in degrees:
        inv = [sum(inv[i] * (-d) ** (j - i) for i in range(j + 1)) for j in range(r + 1)]
    return sum(comb(m + 1, i) * inv[r - i] for i in range(min(r, m + 1) + 1))


def chi_complete_intersection(d1: int, d2: int, m: int) -> int:
    """Euler characteristic of a smooth transversal intersection of degrees d1, d2 in CP^m."""
    if d1 < 1 or d2 < 1 or m < 1:
        raise PreconditionError("need positive degrees and m >= 1")
    return d1 * d2 * _series_coeff((d1, d2), m, m - 2)


def chi_transversal_complement(d1: int, d2: int, m: int) -> int:
    """chi of CP^m minus two transversal smooth hypersurfaces of degrees d1 and d2."""
    if d1 < 1 or d2 < 1 or m < 1:
        raise PreconditionError("need positive degrees and m >= 1")
    return (chi_projective_space(m) - chi_smooth_hypersurface(d1, m)
            - chi_smooth_hypersurface(d2, m) + chi_complete_intersection(d1, d2, m))


# -- text format --------------------------------------------------------

def parse_strata(text: str) -> StratifiedProblem:
    """Parse ``affine:`` / ``infinity:`` sections of ``stratum <label> chi=<n> zeta=<z>`` lines."""
    sections = {"affine": [], "infinity": []}
    current = None
    offset = 0
    for raw in text.splitlines(keepends=True):
        line_start = offset
        offset += len(raw)
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        col = line_start + (len(line) - len(line.lstrip()))
        if stripped in ("affine:", "infinity:"):
            current = stripped[:-1]
            continue
        words = stripped.split(None, 3)
        if words[0] != "stratum":
            raise ParseError("expected 'stratum', 'affine:' or 'infinity:'", text, col)
        if current is None:
            raise ParseError("stratum line before any section header", text, col)
        if len(words) < 4 or not words[2].startswith("chi=") or not words[3].startswith("zeta="):
            raise ParseError("expected 'stratum <label> chi=<integer> zeta=<zeta>'", text, col)
        label = words[1]
        try:
            chi = int(words[2][4:])
        except ValueError:
            raise ParseError("chi must be an integer", text, text.index(words[2], col) + 4) from None
        zstart = text.index(words[3], col) + 5
        try:
            zeta = parse_zeta(words[3][5:])
        except ParseError as exc:
            raise ParseError("bad zeta", text, zstart + exc.position) from None
        sections[current].append(Stratum(label, chi, zeta))
    try:
        return StratifiedProblem(sections["affine"], sections["infinity"])
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def format_strata(problem: StratifiedProblem) -> str:
    out = []
    for name in ("affine", "infinity"):
        strata = getattr(problem, name)
        if strata:
            out.append(f"{name}:")
            out.extend(s.line() for s in strata)
    return "\n".join(out) + ("\n" if out else "")
