"""Command-line interface.

Every command prints one result line ``<zeta>  chi=<degree>`` on stdout
(``example`` first prints the strata it integrated).  Parse errors exit
with status 2, precondition violations with status 3.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import warnings
from dataclasses import dataclass

from .errors import ParseError, PreconditionError
from .fixtures import example_problem
from .germ import family_zeta_at_point, hat_family_zeta, milnor_zeta
from .localize import (
    assemble_global,
    chi_complete_intersection,
    chi_projective_space,
    chi_smooth_hypersurface,
    chi_transversal_complement,
    parse_strata,
)
from .poly import GermFamily, Poly, homogenize, parse_poly
from .zeta import CycloProd, expand_series

EXIT_PARSE = 2
EXIT_PRECONDITION = 3


@dataclass(frozen=True)
class FamilyFile:
    vars: tuple
    f: Poly
    g: Poly
    degree: int | None = None

    @property
    def family(self) -> GermFamily:
        return GermFamily(self.f, self.g)

    def homogenized(self) -> GermFamily:
        """Both members homogenized at the declared (or generic) degree, x0 first."""
        d = self.degree if self.degree is not None else max(self.f.total_degree(), self.g.total_degree(), 0)
        return GermFamily(homogenize(self.f, d), homogenize(self.g, d))


_KEY = re.compile(r"\s*(f|g|degree)\s*=\s*(.*)$")


def parse_family_file(text: str, require_g: bool = True) -> FamilyFile:
    """Read ``vars ...`` / ``f = ...`` / ``g = ...`` / optional ``degree = d``."""
    names = None
    fields = {}
    offset = 0
    for raw in text.splitlines(keepends=True):
        start = offset
        offset += len(raw)
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = start + len(line) - len(line.lstrip())
        if names is None:
            words = line.split()
            if words[0] != "vars" or len(words) < 2:
                raise ParseError("first line must be 'vars <name> ...'", text, col)
            names = tuple(words[1:])
            continue
        m = _KEY.match(line)
        if not m:
            raise ParseError("expected 'f = ...', 'g = ...' or 'degree = ...'", text, col)
        key, value = m.group(1), m.group(2)
        if key in fields:
            raise ParseError(f"duplicate '{key}' line", text, col)
        vpos = start + m.start(2)
        if key == "degree":
            if not value.strip().isdigit():
                raise ParseError("degree must be a nonnegative integer", text, vpos)
            fields[key] = int(value)
        else:
            try:
                fields[key] = parse_poly(value, names)
            except ParseError as exc:
                raise ParseError(str(exc).rsplit(" at position", 1)[0], text, vpos + exc.position) from None
    if names is None:
        raise ParseError("missing 'vars' line", text, 0)
    if "f" not in fields:
        raise ParseError("missing 'f = ...' line", text, len(text))
    if "g" not in fields:
        if require_g:
            raise ParseError("missing 'g = ...' line", text, len(text))
        fields["g"] = Poly(len(names))
    ff = FamilyFile(names, fields["f"], fields["g"], fields.get("degree"))
    if ff.degree is not None and ff.degree < max(ff.f.total_degree(), ff.g.total_degree()):
        raise PreconditionError("declared degree is below the degree of f or g")
    return ff


def _infer_vars(expr: str) -> list[str]:
    seen = []
    for name in re.findall(r"[A-Za-z_][A-Za-z0-9_]*", expr):
        if name not in seen:
            seen.append(name)
    return seen or ["x"]


def _emit(zeta: CycloProd, series: int | None, suffix: str = "") -> None:
    print(f"{zeta}  chi={zeta.degree}{suffix}")
    if series is not None:
        print("series: " + ", ".join(str(c) for c in expand_series(zeta, series)))


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_germ(args) -> None:
    if os.path.isfile(args.germ):
        f = parse_family_file(_read(args.germ), require_g=False).f
    else:
        names = args.vars.split() if args.vars else _infer_vars(args.germ)
        f = parse_poly(args.germ, names)
    _emit(milnor_zeta(f), args.series)


def cmd_family(args) -> None:
    ff = parse_family_file(_read(args.file))
    if args.hat is not None:
        if args.hat not in ff.vars:
            raise PreconditionError(f"--hat names unknown variable {args.hat!r}")
        res = hat_family_zeta(ff.family, ff.vars.index(args.hat))
        _emit(res.zeta, args.series)
    else:
        res = family_zeta_at_point(ff.family)
        _emit(res.zeta, args.series, f"  case={res.case_tag}")


def cmd_integrate(args) -> None:
    problem = parse_strata(_read(args.file))
    _emit(assemble_global(problem), args.series)


def cmd_example(args) -> None:
    params = {}
    if args.number == 1:
        params = {"d0": args.d0, "d": args.d}
    elif args.number in (3, 4):
        params = {"n": args.n, "d0": args.d0, "d": args.d}
    missing = [k for k, v in params.items() if v is None]
    if missing:
        raise PreconditionError(f"example {args.number} needs --{' --'.join(missing)}")
    report = example_problem(args.number, **params)
    sys.stdout.write(report.text())
    if args.series is not None:
        print("series: " + ", ".join(str(c) for c in expand_series(report.zeta, args.series)))


def cmd_chi(args) -> None:
    kind, nums = args.kind, args.values
    arity = {"projective": 1, "hypersurface": 2, "intersection": 3, "complement": 3}
    if len(nums) != arity[kind]:
        raise PreconditionError(f"chi {kind} takes {arity[kind]} integer arguments")
    fn = {
        "projective": chi_projective_space,
        "hypersurface": chi_smooth_hypersurface,
        "intersection": chi_complete_intersection,
        "complement": chi_transversal_complement,
    }[kind]
    print(fn(*nums))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zetaloc", description="Monodromy zeta functions of polynomial families.")
    sub = p.add_subparsers(dest="command", required=True)

    def series_opt(sp):
        sp.add_argument("--series", type=int, metavar="N", help="also print the Taylor coefficients up to t^N")

    sp = sub.add_parser("germ", help="zeta function of a nondegenerate germ")
    sp.add_argument("germ", help="polynomial expression, or a file with 'vars' and 'f =' lines")
    sp.add_argument("--vars", help="variable names, space separated (default: order of appearance)")
    series_opt(sp)
    sp.set_defaults(func=cmd_germ)

    sp = sub.add_parser("family", help="local zeta function of f + sigma*g at the origin")
    sp.add_argument("file")
    sp.add_argument("--hat", metavar="VAR", help="divide by the family restricted to VAR = 0")
    series_opt(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("integrate", help="integrate a strata file")
    sp.add_argument("file")
    series_opt(sp)
    sp.set_defaults(func=cmd_integrate)

    sp = sub.add_parser("example", help="built-in families 1-4")
    sp.add_argument("number", type=int, choices=[1, 2, 3, 4])
    sp.add_argument("--d0", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--n", type=int)
    series_opt(sp)
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("chi", help="Euler characteristics of projective strata")
    sp.add_argument("kind", choices=["projective", "hypersurface", "intersection", "complement"])
    sp.add_argument("values", type=int, nargs="+")
    sp.set_defaults(func=cmd_chi)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "series", None) is not None and args.series < 0:
        print("error: --series must be nonnegative", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = _show_warning
            args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return 0


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
