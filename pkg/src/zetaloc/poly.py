"""Sparse multivariate polynomials with exact rational coefficients.

Variables are addressed by 0-based index.  A polynomial knows only its
variable count; names live with the caller (see ``parse_poly`` and
``format_poly``).  The operations here are the ones needed to prepare
local germs of a family ``f + sigma*g``: supports, coordinate restriction,
homogenization, affine charts and translation to a rational point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, PreconditionError

__all__ = [
    "Poly",
    "GermFamily",
    "parse_poly",
    "format_poly",
    "support",
    "restrict_to_subset",
    "set_var_zero",
    "homogenize",
    "chart",
    "translate",
    "monomial",
    "constant",
    "simplex_poly",
]

Exponent = tuple  # tuple[int, ...]


class Poly:
    """Immutable polynomial: ``nvars`` and a map exponent -> nonzero Fraction."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[tuple, Fraction] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            table[e] = table.get(e, Fraction(0)) + Fraction(c)
        self.nvars = nvars
        self._terms = {e: c for e, c in sorted(table.items()) if c != 0}
        self._hash = None

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def vanishes_at_origin(self) -> bool:
        return self.constant_term == 0

    def total_degree(self) -> int:
        """Largest exponent sum; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: Poly) -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly(self.nvars, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


@dataclass(frozen=True)
class GermFamily:
    """The local family ``f + sigma*g`` of germs at the origin."""

    f: Poly
    g: Poly

    def __post_init__(self):
        if self.f.nvars != self.g.nvars:
            raise ValueError("f and g must have the same number of variables")

    @property
    def nvars(self) -> int:
        return self.f.nvars

    def map(self, op, *args) -> GermFamily:
        """Apply a polynomial operation to both members."""
        return GermFamily(op(self.f, *args), op(self.g, *args))


def constant(nvars: int, c) -> Poly:
    return Poly(nvars, {(0,) * nvars: c})


def monomial(exponent: Sequence[int], c=1) -> Poly:
    return Poly(len(exponent), {tuple(exponent): c})


def simplex_poly(nvars: int, d: int) -> Poly:
    """Sum of all monomials of degree exactly ``d``: a full simplex support."""
    return Poly(nvars, {e: 1 for e in _compositions(d, nvars)})


def _compositions(d: int, n: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


# -- text ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))"
)


def _tokenize(s: str):
    pos = 0
    toks = []
    n = len(s)
    while True:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {s[pos]!r}", s, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


def parse_poly(s: str, vars: Sequence[str]) -> Poly:
    """Parse ``s`` over the ordered variable names ``vars``.

    Terms are joined by ``+``/``-``; a term is an optional rational
    coefficient (``3``, ``3/2``), optionally followed by ``*``, and a
    product of powers ``x^k`` separated by ``*`` or blanks.
    """
    index = {name: i for i, name in enumerate(vars)}
    if len(index) != len(vars):
        raise ValueError("duplicate variable names")
    nvars = len(vars)
    toks = _tokenize(s)
    i = 0
    terms: list[tuple[tuple, Fraction]] = []

    def peek():
        return toks[i]

    if peek()[0] == "end":
        raise ParseError("empty polynomial", s, 0)
    first = True
    while peek()[0] != "end":
        sign = 1
        kind, val, pos = peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", s, pos)
        first = False
        coeff = Fraction(1)
        has_coeff = False
        kind, val, pos = peek()
        if kind == "num":
            num = int(val)
            i += 1
            if peek()[0] == "op" and peek()[1] == "/":
                i += 1
                kind, val, pos = peek()
                if kind != "num":
                    raise ParseError("expected denominator", s, pos)
                den = int(val)
                if den == 0:
                    raise ParseError("zero denominator", s, pos)
                i += 1
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            has_coeff = True
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                if peek()[0] != "name":
                    raise ParseError("expected variable after '*'", s, peek()[2])
        exps = [0] * nvars
        has_mono = False
        while peek()[0] == "name":
            kind, name, pos = peek()
            if name not in index:
                raise ParseError(f"unknown variable {name!r}", s, pos)
            i += 1
            k = 1
            if peek()[0] == "op" and peek()[1] == "^":
                i += 1
                kind, val, pos = peek()
                if kind != "num" or int(val) < 1:
                    raise ParseError("expected positive integer exponent", s, pos)
                k = int(val)
                i += 1
            exps[index[name]] += k
            has_mono = True
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
                if peek()[0] != "name":
                    raise ParseError("expected variable after '*'", s, peek()[2])
        if not (has_coeff or has_mono):
            raise ParseError("expected a term", s, peek()[2])
        terms.append((tuple(exps), sign * coeff))
    return Poly(nvars, terms)


def _default_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)]


def format_poly(p: Poly, vars: Sequence[str] | None = None) -> str:
    """Canonical text: terms by descending degree, then descending exponent."""
    names = list(vars) if vars is not None else _default_names(p.nvars)
    if len(names) != p.nvars:
        raise ValueError("wrong number of variable names")
    if p.is_zero():
        return "0"
    order = sorted(p.items(), key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0])))
    out = []
    for j, (e, c) in enumerate(order):
        neg = c < 0
        a = -c if neg else c
        mono = "*".join(
            name if k == 1 else f"{name}^{k}" for name, k in zip(names, e) if k
        )
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if j == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- germ preparation ---------------------------------------------------

def support(p: Poly) -> frozenset:
    return frozenset(e for e, _ in p.items())


def restrict_to_subset(p: Poly, I: Iterable[int]) -> Poly:
    """Keep the monomials involving only variables in ``I`` (others set to 0)."""
    keep = set(I)
    if not keep:
        raise PreconditionError("coordinate subset must be nonempty")
    if any(j < 0 or j >= p.nvars for j in keep):
        raise PreconditionError(f"subset {sorted(keep)} out of range for {p.nvars} variables")
    return Poly(
        p.nvars,
        {e: c for e, c in p.items() if all(x == 0 for j, x in enumerate(e) if j not in keep)},
    )


def set_var_zero(p: Poly, j: int) -> Poly:
    """Restrict to the hyperplane ``x_j = 0``; the result has one variable fewer."""
    if not 0 <= j < p.nvars:
        raise PreconditionError(f"variable index {j} out of range for {p.nvars} variables")
    return Poly(p.nvars - 1, {e[:j] + e[j + 1:]: c for e, c in p.items() if e[j] == 0})


def homogenize(p: Poly, d: int) -> Poly:
    """``x_0^d * p(x_1/x_0, ...)`` with the new variable inserted first."""
    if d < p.total_degree():
        raise PreconditionError(f"degree {d} is below the total degree {p.total_degree()}")
    return Poly(p.nvars + 1, {(d - sum(e),) + e: c for e, c in p.items()})


def chart(p: Poly, i: int) -> Poly:
    """Dehomogenize at ``x_i = 1``, deleting coordinate ``i``."""
    if not p.is_homogeneous():
        raise PreconditionError("chart needs a homogeneous polynomial")
    if not 0 <= i < p.nvars:
        raise PreconditionError(f"variable index {i} out of range for {p.nvars} variables")
    return Poly(p.nvars - 1, [(e[:i] + e[i + 1:], c) for e, c in p.items()])


def translate(p: Poly, c: Sequence) -> Poly:
    """Expand ``p(x + c)`` exactly."""
    c = [Fraction(x) for x in c]
    if len(c) != p.nvars:
        raise ValueError("translation vector has the wrong length")
    n = p.nvars
    out: dict[tuple, Fraction] = {}
    for e, coeff in p.items():
        # prod_j (x_j + c_j)^{e_j} expanded by the binomial theorem
        per_var = []
        for j, k in enumerate(e):
            if c[j] == 0 or k == 0:
                per_var.append([(k, Fraction(1))])
            else:
                per_var.append([(r, comb(k, r) * c[j] ** (k - r)) for r in range(k + 1)])
        for choice in _cartesian(*per_var):
            expo = tuple(r for r, _ in choice)
            w = coeff
            for _, b in choice:
                w *= b
            out[expo] = out.get(expo, Fraction(0)) + w
    return Poly(n, out)
