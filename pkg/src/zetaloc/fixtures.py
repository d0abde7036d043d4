"""Ready-made stratified problems for four families of polynomials.

1. ``x^d0 + sigma*(x^d + y^d)`` in two variables.
2. ``x1^4 + x2^3 + x3^2 + sigma*x2^4``.
3. ``f_d0 + sigma*g_d`` with generic homogeneous forms in ``n`` variables.
4. ``f_d0 + sigma*l^d`` with ``l`` a generic linear form.

Local data at rational points come from exact charts and translations of
the homogenized family.  Where a stratum only has irrational points, or
where genericity makes the local shape the only relevant information
(families 3 and 4), a local model pair is embedded instead; its comment
states which geometric situation it encodes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import PreconditionError
from .germ import FragileSupportWarning, LocalZetaResult, family_zeta_at_point, hat_family_zeta
from .localize import (
    StratifiedProblem,
    Stratum,
    assemble_global,
    chi_complete_intersection,
    chi_projective_space,
    chi_smooth_hypersurface,
    chi_transversal_complement,
    format_strata,
)
from .poly import GermFamily, Poly, chart, constant, homogenize, monomial, parse_poly, simplex_poly, translate
from .zeta import CycloProd

__all__ = ["ExampleReport", "example_problem", "example1", "example2", "example3", "example4"]


@dataclass(frozen=True)
class ExampleReport:
    title: str
    problem: StratifiedProblem

    @property
    def zeta(self) -> CycloProd:
        return assemble_global(self.problem)

    def text(self) -> str:
        z = self.zeta
        return f"# {self.title}\n{format_strata(self.problem)}{z}  chi={z.degree}\n"


def _local(fam: GermFamily) -> LocalZetaResult:
    return family_zeta_at_point(fam)


def _at_point(f: Poly, g: Poly, point) -> LocalZetaResult:
    return family_zeta_at_point(GermFamily(translate(f, point), translate(g, point)))


def _at_infinity(ft: Poly, gt: Poly, chart_var: int, point) -> LocalZetaResult:
    """Hat zeta at a point of the hyperplane x0 = 0, given in the chart x_{chart_var} = 1."""
    if chart_var == 0:
        raise ValueError("points at infinity live in charts x_i = 1 with i >= 1")
    fam = GermFamily(translate(chart(ft, chart_var), point), translate(chart(gt, chart_var), point))
    return hat_family_zeta(fam, 0)


def _mono(n: int, **powers) -> Poly:
    # powers keyed v0, v1, ... by local variable index
    e = [0] * n
    for key, k in powers.items():
        e[int(key[1:])] = k
    return monomial(e)


def _stratum(label: str, chi: int, local: LocalZetaResult) -> Stratum:
    return Stratum(label, chi, local.zeta)


def _quiet(fn):
    def wrapped(*args, **kwargs):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", FragileSupportWarning)
            return fn(*args, **kwargs)
    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


def _positive(**params):
    for name, v in params.items():
        if not isinstance(v, int) or v < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {v!r}")


@_quiet
def example1(d0: int, d: int) -> ExampleReport:
    _positive(d0=d0, d=d)
    names = ["x", "y"]
    f = parse_poly(f"x^{d0}", names)
    g = parse_poly(f"x^{d} + y^{d}", names)
    D = max(d0, d)
    ft, gt = homogenize(f, D), homogenize(g, D)  # variables (x0, x, y)
    affine = [
        _stratum("origin", 1, _at_point(f, g, (0, 0))),
        # C* worth of points (0, y), y != 0
        _stratum("line_minus_origin", 0, _at_point(f, g, (0, 1))),
    ]
    infinity = [_stratum("point_x=0", 1, _at_infinity(ft, gt, 2, (0, 0)))]
    if d0 < d:
        e = d - d0
        # the d points where x^d + y^d = 0 meets infinity are irrational; in the
        # chart y = 1 with u = x - c the pair is x0^e * unit and u * unit
        model = GermFamily(_mono(2, v0=e), _mono(2, v1=1))
        infinity.append(_stratum("points_g=0", d, hat_family_zeta(model, 0)))
        chi_generic = chi_projective_space(1) - 1 - d
        infinity.append(_stratum("generic", chi_generic, _at_infinity(ft, gt, 1, (0, 1))))
    return ExampleReport(f"family x^{d0} + sigma*(x^{d} + y^{d})", StratifiedProblem(affine, infinity))


@_quiet
def example2() -> ExampleReport:
    names = ["x1", "x2", "x3"]
    f = parse_poly("x1^4 + x2^3 + x3^2", names)
    g = parse_poly("x2^4", names)
    ft, gt = homogenize(f, 4), homogenize(g, 4)  # variables (x0, x1, x2, x3)
    affine = [
        _stratum("origin", 1, _at_point(f, g, (0, 0, 0))),
        # (0, -1, 1) is a smooth point of f = 0; the stratum is C* times a link
        _stratum("smooth_part", 0, _at_point(f, g, (0, -1, 1))),
    ]
    infinity = [
        _stratum("point_(0:0:0:1)", 1, _at_infinity(ft, gt, 3, (0, 0, 0))),
        # (0:0:1:c), here c = 1, in the chart x2 = 1 with local variables (x0, x1, x3)
        _stratum("line_minus_point", 1, _at_infinity(ft, gt, 2, (0, 0, 1))),
    ]
    return ExampleReport("family x1^4 + x2^3 + x3^2 + sigma*x2^4", StratifiedProblem(affine, infinity))


def _check_generic_params(n, d0, d):
    _positive(n=n, d0=d0, d=d)
    if not 2 <= n <= 4:
        raise PreconditionError(f"n must be between 2 and 4, got {n}")


def _smooth_local(n: int) -> LocalZetaResult:
    # a smooth point of the affine zero set away from the origin
    return _local(GermFamily(_mono(n, v0=1), constant(n, 1)))


def _generic_pair_problem(n, d0, f, g, g_degree_at_infinity, g_is_power) -> StratifiedProblem:
    """Shared stratification for families 3 and 4.

    ``g_is_power`` marks ``g = l^d``: at infinity its zero set is the
    hyperplane ``l = 0`` (degree 1) carrying multiplicity d.
    """
    d = g_degree_at_infinity
    m = n - 1
    hyp_g = 1 if g_is_power else d
    mult = d if g_is_power else 1
    # local variables at infinity: v0 = x0, v1 = equation of f = 0, v2 = equation of g = 0
    g_eq = 2 if n >= 3 else 1
    affine = [
        _stratum("origin", 1, _local(GermFamily(f, g))),
        _stratum("cone_minus_origin", 0, _smooth_local(n)),
    ]
    ci = chi_complete_intersection(d0, hyp_g, m)
    infinity = []
    if d0 > d:
        e = d0 - d
        infinity.append(_stratum("f=0", chi_smooth_hypersurface(d0, m) - ci,
                                 hat_family_zeta(GermFamily(_mono(n, v1=1), _mono(n, v0=e)), 0)))
        if n >= 3:
            infinity.append(_stratum("f=g=0", ci, hat_family_zeta(
                GermFamily(_mono(n, v1=1), _mono(n, v0=e, **{f"v{g_eq}": mult})), 0)))
    elif d0 == d:
        infinity.append(_stratum("f=0", chi_smooth_hypersurface(d0, m) - ci,
                                 hat_family_zeta(GermFamily(_mono(n, v1=1), constant(n, 1)), 0)))
        if n >= 3:
            infinity.append(_stratum("f=g=0", ci, hat_family_zeta(
                GermFamily(_mono(n, v1=1), _mono(n, **{f"v{g_eq}": mult})), 0)))
    else:
        e = d - d0
        # for n = 2 the zero sets of f and g at infinity are disjoint point sets
        g_var = g_eq if n >= 3 else 1
        infinity.append(_stratum("f=0", chi_smooth_hypersurface(d0, m) - ci,
                                 hat_family_zeta(GermFamily(_mono(n, v0=e, v1=1), constant(n, 1)), 0)))
        infinity.append(_stratum("g=0", chi_smooth_hypersurface(hyp_g, m) - ci,
                                 hat_family_zeta(GermFamily(_mono(n, v0=e), _mono(n, **{f"v{g_var}": mult})), 0)))
        if n >= 3:
            infinity.append(_stratum("f=g=0", ci, hat_family_zeta(
                GermFamily(_mono(n, v0=e, v1=1), _mono(n, **{f"v{g_eq}": mult})), 0)))
        infinity.append(_stratum("complement", chi_transversal_complement(d0, hyp_g, m),
                                 hat_family_zeta(GermFamily(_mono(n, v0=e), constant(n, 1)), 0)))
    return StratifiedProblem(affine, infinity)


@_quiet
def example3(n: int, d0: int, d: int) -> ExampleReport:
    _check_generic_params(n, d0, d)
    f = simplex_poly(n, d0)
    g = simplex_poly(n, d)
    problem = _generic_pair_problem(n, d0, f, g, d, g_is_power=False)
    return ExampleReport(f"generic forms f_{d0} + sigma*g_{d} in {n} variables", problem)


@_quiet
def example4(n: int, d0: int, d: int) -> ExampleReport:
    _check_generic_params(n, d0, d)
    f = simplex_poly(n, d0)
    # after a linear change of coordinates the generic linear form is x_n
    g = monomial([0] * (n - 1) + [d])
    problem = _generic_pair_problem(n, d0, f, g, d, g_is_power=True)
    return ExampleReport(f"generic form f_{d0} + sigma*l^{d} in {n} variables", problem)


def example_problem(number: int, **params) -> ExampleReport:
    builders = {1: example1, 2: example2, 3: example3, 4: example4}
    if number not in builders:
        raise PreconditionError(f"unknown example {number}; choose 1-4")
    try:
        return builders[number](**params)
    except TypeError as exc:
        raise PreconditionError(f"bad parameters for example {number}: {exc}") from None
