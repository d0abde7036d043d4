"""Zeta functions as finite products of factors (1 - t^k)^e.

Every monodromy zeta function handled by this package is stored in the
basis ``(1 - t^k)``, ``k >= 1``, with integer exponents.  Equality is
equality of the canonical exponent tables; two different factorizations
of the same rational function (through cyclotomic identities) are not
identified.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, Mapping

from .errors import ParseError

__all__ = [
    "CycloProd",
    "one",
    "cyclo",
    "mul",
    "div",
    "power",
    "degree",
    "parse_zeta",
    "format_zeta",
    "expand_series",
]


class CycloProd:
    """Immutable product ``prod_k (1 - t^k)^{e_k}``.

    >>> z = CycloProd({1: 1, 2: -2})
    >>> str(z), z.degree
    ('(1-t)(1-t^2)^-2', -3)
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        table: dict[int, int] = {}
        for k, e in items:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ValueError(f"cycle length must be a positive integer, got {k!r}")
            if isinstance(e, bool) or not isinstance(e, int):
                raise ValueError(f"exponent must be an integer, got {e!r}")
            table[k] = table.get(k, 0) + e
        self._factors = tuple(sorted((k, e) for k, e in table.items() if e != 0))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    def items(self):
        return iter(self._factors)

    def exponent(self, k: int) -> int:
        return dict(self._factors).get(k, 0)

    @property
    def degree(self) -> int:
        return sum(k * e for k, e in self._factors)

    def is_one(self) -> bool:
        return not self._factors

    def __mul__(self, other: CycloProd) -> CycloProd:
        if not isinstance(other, CycloProd):
            return NotImplemented
        return CycloProd(self._factors + other._factors)

    def __truediv__(self, other: CycloProd) -> CycloProd:
        if not isinstance(other, CycloProd):
            return NotImplemented
        return CycloProd(self._factors + tuple((k, -e) for k, e in other._factors))

    def __pow__(self, e: int) -> CycloProd:
        if isinstance(e, bool) or not isinstance(e, int):
            return NotImplemented
        return CycloProd((k, x * e) for k, x in self._factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloProd):
            return self._factors == other._factors
        if other == 1:
            return not self._factors
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._factors)

    def __str__(self) -> str:
        return format_zeta(self)

    def __repr__(self) -> str:
        return f"CycloProd({dict(self._factors)!r})"


def one() -> CycloProd:
    return CycloProd()


def cyclo(k: int, e: int = 1) -> CycloProd:
    """The single factor ``(1 - t^k)^e``."""
    return CycloProd({k: e})


def mul(a: CycloProd, b: CycloProd) -> CycloProd:
    return a * b


def div(a: CycloProd, b: CycloProd) -> CycloProd:
    return a / b


def power(a: CycloProd, e: int) -> CycloProd:
    return a ** e


def degree(a: CycloProd) -> int:
    """Degree of numerator minus degree of denominator, ``sum k*e_k``."""
    return a.degree


_ATOM = re.compile(r"\(1-t(?:\^([0-9]+))?\)|1")
_EXP = re.compile(r"\^(-?[0-9]+)")
_SEP = re.compile(r"[ \t]*(?:\*[ \t]*)?")


def parse_zeta(s: str) -> CycloProd:
    """Parse text such as ``"(1-t^4)^2 (1-t^2)^-1"``.

    Atoms are ``1``, ``(1-t)`` and ``(1-t^K)``, each optionally followed by
    one or more ``^E`` suffixes; atoms may be separated by blanks or ``*``.
    """
    table: dict[int, int] = {}
    pos = 0
    n = len(s)
    # leading/trailing blanks are tolerated
    while pos < n and s[pos] in " \t":
        pos += 1
    end = n
    while end > pos and s[end - 1] in " \t\n\r":
        end -= 1
    if pos == end:
        raise ParseError("empty zeta expression", s, pos)
    first = True
    while pos < end:
        if not first:
            pos = _SEP.match(s, pos, end).end()
            if pos >= end:
                raise ParseError("dangling separator", s, pos)
        first = False
        m = _ATOM.match(s, pos, end)
        if not m:
            raise ParseError("expected '1', '(1-t)' or '(1-t^K)'", s, pos)
        if m.group(0) == "1":
            k = None
        else:
            k = int(m.group(1)) if m.group(1) is not None else 1
            if k < 1:
                raise ParseError("cycle length must be positive", s, m.start(1))
        pos = m.end()
        e = 1
        while pos < end and s[pos] == "^":
            em = _EXP.match(s, pos, end)
            if not em:
                raise ParseError("expected integer exponent", s, pos + 1)
            e *= int(em.group(1))
            pos = em.end()
        if k is not None:
            table[k] = table.get(k, 0) + e
    return CycloProd(table)


def format_zeta(a: CycloProd) -> str:
    if a.is_one():
        return "1"
    parts = []
    for k, e in a.items():
        base = "(1-t)" if k == 1 else f"(1-t^{k})"
        parts.append(base if e == 1 else f"{base}^{e}")
    return "".join(parts)


def expand_series(a: CycloProd, N: int) -> list[int]:
    """Taylor coefficients of ``a`` at ``t = 0`` up to ``t^N`` inclusive."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    coeffs = [1] + [0] * N
    for k, e in a.items():
        factor = [0] * (N + 1)
        if e > 0:
            for j in range(min(e, N // k) + 1):
                factor[j * k] = (-1) ** j * comb(e, j)
        else:
            r = -e
            for j in range(N // k + 1):
                factor[j * k] = comb(j + r - 1, j)
        coeffs = _truncated_product(coeffs, factor, N)
    return coeffs


def _truncated_product(p: list[int], q: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, pi in enumerate(p):
        if pi:
            for j in range(N + 1 - i):
                if q[j]:
                    out[i + j] += pi * q[j]
    return out
