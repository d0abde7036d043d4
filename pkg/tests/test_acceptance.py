"""Acceptance run: one check per criterion, each printing a PASS/FAIL line.

    pytest tests/test_acceptance.py -s -v
    python3 tests/test_acceptance.py
"""

import io
import os
import random
import sys
import time
from contextlib import redirect_stdout
from itertools import combinations

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import (  # noqa: E402
    brute_force_normals,
    example1_closed_form,
    example3_exponent,
    example4_exponent,
    milnor_number_brieskorn,
)
from zetaloc import (  # noqa: E402
    Covector,
    CycloProd,
    GermFamily,
    Poly,
    chart,
    constant,
    face_of,
    family_zeta_at_point,
    format_poly,
    format_zeta,
    homogenize,
    kouchnirenko_mu,
    milnor_zeta,
    mixed_volume_sum,
    mixed_volumes,
    normalized_volume,
    pair_face_normals,
    pair_zeta0,
    pair_zeta0_by_subset,
    parse_poly,
    parse_zeta,
    simplex_poly,
    support,
)
from zetaloc.cli import main as cli_main  # noqa: E402
from zetaloc.fixtures import example1, example2, example3, example4  # noqa: E402
from zetaloc.localize import chi_transversal_complement  # noqa: E402


def Z(table):
    return CycloProd(table)


def check(cond, message):
    if not cond:
        raise AssertionError(message)


def stratum(report, section, label):
    return next(s for s in getattr(report.problem, section) if s.label == label)


# -- worked families ------------------------------------------------------------

def criterion_1():
    f, g = parse_poly("x^5", ["x", "y"]), parse_poly("x^3 + y^3", ["x", "y"])
    local = family_zeta_at_point(GermFamily(f, g)).zeta
    check(local == parse_zeta("(1-t)(1-t^2)^-2"), f"local zeta {local}")
    for d0, d in [(5, 3), (4, 2), (7, 3)]:
        z = example1(d0, d).zeta
        check(z == Z(example1_closed_form(d0, d)), f"(d0, d) = ({d0}, {d}): {z}")
    check(example1(5, 3).zeta == local, "global differs from local")
    return "local and global (1-t)(1-t^2)^-2; (4,2), (7,3) match the closed form"


def criterion_2():
    for d in range(1, 6):
        z = example1(d, d).zeta
        check(z == parse_zeta("(1-t)"), f"d0 = d = {d}: {z}")
    return "1-t for d0 = d in 1..5"


def criterion_3():
    rep = example1(2, 4)
    check(rep.zeta == parse_zeta("(1-t)(1-t^2)^-3"), f"global {rep.zeta}")
    generic = stratum(rep, "infinity", "generic").zeta
    check(generic == parse_zeta("(1-t^2)"), f"generic infinity factor {generic}")
    for d0, d in [(1, 3), (2, 5), (3, 4)]:
        check(stratum(example1(d0, d), "infinity", "generic").zeta == Z({d - d0: 1}), f"({d0}, {d})")
        check(example1(d0, d).zeta == Z(example1_closed_form(d0, d)), f"global ({d0}, {d})")
    return "global (1-t)(1-t^2)^-3, generic factor 1-t^(d-d0)"


def criterion_4():
    rep = example2()
    pt = stratum(rep, "infinity", "point_(0:0:0:1)").zeta
    check(pt == parse_zeta("(1-t^4)^2(1-t^2)^-1") and pt.degree == 6, f"hat at point {pt}")
    line = stratum(rep, "infinity", "line_minus_point").zeta
    check(line == parse_zeta("(1-t)(1-t^4)^-1"), f"stratum-d hat {line}")
    origin = stratum(rep, "affine", "origin").zeta
    check(origin == parse_zeta("(1-t)"), f"origin {origin}")
    check(rep.zeta == parse_zeta("(1-t^4)(1-t)^2(1-t^2)^-1"), f"global {rep.zeta}")
    return "hat (1-t^4)^2(1-t^2)^-1 chi 6, (1-t)(1-t^4)^-1, origin 1-t, global matches"


def criterion_5():
    names = ["x0", "x1", "x2"]
    f = parse_poly("x0^2 + x1^4 + x0*x2^3", names)
    g = parse_poly("x2^4", names)
    F = support(f)
    (a,) = pair_face_normals(F, support(g), (0, 1, 2))
    check(a.weights == (6, 3, 2), f"normal {a.weights}")
    check(normalized_volume(face_of(F, a), a) == 2, "triangle volume")
    parts = pair_zeta0_by_subset(f, g)
    check(parts[(0, 2)] == parse_zeta("(1-t^2)^-1"), f"{{x0,x2}} gives {parts.get((0, 2))}")
    singles = [z for I, z in parts.items() if len(I) == 1]
    check(all(z.is_one() for z in singles), "single-variable subsets")
    check(parts[(0, 1, 2)] == parse_zeta("(1-t^4)^2"), "full subset")
    return "normal (6,3,2), volume 2, {x0,x2} -> (1-t^2)^-1, singletons trivial"


def criterion_6():
    count = 0
    for n in (2, 3, 4):
        for d0 in range(2, 6):
            for d in range(1, d0):
                e = example3_exponent(n, d0, d)
                z = example3(n, d0, d).zeta
                check(z == Z({1: 1}) * Z({d0 - d: e}), f"(n, d0, d) = ({n}, {d0}, {d}): {z}")
                count += 1
    check(example3_exponent(3, 3, 1) == 4, "sample exponent")
    return f"{count} parameter triples"


def criterion_7():
    count = 0
    for n in (2, 3):
        for d in range(2, 6):
            for d0 in range(1, d):
                e = example3_exponent(n, d0, d)
                rep = example3(n, d0, d)
                chi = stratum(rep, "infinity", "complement").chi
                check(chi == chi_transversal_complement(d0, d, n - 1) == e, f"complement chi ({n},{d0},{d}) = {chi}")
                check(rep.zeta == Z({1: 1}) * Z({d - d0: e}), f"global ({n},{d0},{d}): {rep.zeta}")
                count += 1
    return f"{count} parameter triples"


def criterion_8():
    count = 0
    for n in (2, 3, 4):
        for d0 in range(1, 6):
            for d in range(1, 6):
                if d0 == d:
                    continue
                z = example4(n, d0, d).zeta
                check(z == Z({1: 1}) * Z({abs(d0 - d): example4_exponent(n, d0)}), f"({n},{d0},{d}): {z}")
                count += 1
    check(example4(3, 4, 2).zeta == parse_zeta("(1-t)(1-t^2)^9"), "sample")
    return f"{count} parameter triples"


# -- properties ---------------------------------------------------------------------

def _all_reports():
    yield example2()
    for d0 in range(1, 6):
        for d in range(1, 6):
            yield example1(d0, d)
    for n in (2, 3, 4):
        for d0 in range(1, 5):
            for d in range(1, 5):
                yield example3(n, d0, d)
                yield example4(n, d0, d)


def criterion_9():
    rng = random.Random(9)
    for _ in range(1000):
        a = Z({rng.randint(1, 12): rng.randint(-5, 5) for _ in range(rng.randint(0, 5))})
        b = Z({rng.randint(1, 12): rng.randint(-5, 5) for _ in range(rng.randint(0, 5))})
        e = rng.randint(-4, 4)
        check((a * b).degree == a.degree + b.degree, f"{a} * {b}")
        check((a ** e).degree == e * a.degree, f"{a} ** {e}")
    reports = 0
    for rep in _all_reports():
        lines = rep.text().splitlines()
        zeta, chi = lines[-1].split("  ")
        check(int(chi[4:]) == parse_zeta(zeta).degree, f"{rep.title}: {lines[-1]}")
        reports += 1
    outputs = 0
    for argv in (["germ", "x^2+y^3"], ["germ", "x^4"], ["example", "2"], ["example", "1", "--d0", "2", "--d", "4"]):
        buf = io.StringIO()
        with redirect_stdout(buf):
            check(cli_main(argv) == 0, f"exit status of {argv}")
        zeta, chi = buf.getvalue().splitlines()[-1].split("  ")[:2]
        check(int(chi[4:]) == parse_zeta(zeta).degree, f"{argv}")
        outputs += 1
    return f"1000 random products, {reports} example reports, {outputs} CLI outputs"


def _germ_corpus():
    xy, x3 = ["x", "y"], ["x0", "x1", "x2"]
    one_var = [parse_poly(f"x^{k}", ["x"]) for k in (1, 2, 3, 5)]
    two = [parse_poly(s, xy) for s in [
        "x^2 + y^3", "x^3 + y^3", "x^4 + y^6", "x^4 + x*y + y^4", "x^2*y + y^3 + x^5",
        "x^3 + x*y^2 + y^5", "x^5 + x^2*y^2 + y^5", "y + x^2", "x^6 + x^2*y + y^4", "x^3*y + x*y^3 + x^7 + y^7",
    ]]
    three = [parse_poly(s, x3) for s in [
        "x0^2 + x1^2 + x2^2", "x0*x1 + x2^3", "x0^3 + x1^3 + x2^3 + x0*x1*x2", "x0^2 + x1^4 + x0*x2^3 + x2^5",
        "x0^4 + x1^4 + x2^4 + x0^2*x1^2", "x0 + x1^3*x2^3", "x0^2 + x1^3 + x2^4",
    ]]
    return one_var + two + three + [simplex_poly(2, 4), simplex_poly(3, 3)]


def criterion_10():
    corpus = _germ_corpus()
    check(len(corpus) >= 20, "corpus size")
    for f in corpus:
        check(pair_zeta0(f, constant(f.nvars, 1)) == milnor_zeta(f), format_poly(f))
    return f"{len(corpus)} supports in 1-3 variables"


def _brieskorn(exps):
    n = len(exps)
    return Poly(n, {tuple(a * (i == j) for j in range(n)): 1 for i, a in enumerate(exps)})


def criterion_11():
    cases = [(a, b) for a in range(2, 7) for b in range(2, 7)]
    cases += [(a, b, c) for a in range(2, 5) for b in range(2, 5) for c in range(2, 5)]
    for exps in cases:
        f = _brieskorn(exps)
        mu = kouchnirenko_mu(support(f))
        check(mu == milnor_number_brieskorn(exps), f"mu of {exps}")
        check(milnor_zeta(f).degree == 1 + (-1) ** (len(exps) - 1) * mu, f"degree for {exps}")
    generic = 0
    for n in (1, 2, 3):
        for d in range(2, 5):
            f = simplex_poly(n, d)
            check(milnor_zeta(f).degree == 1 + (-1) ** (n - 1) * kouchnirenko_mu(support(f)), f"simplex {n},{d}")
            generic += 1
    return f"{len(cases)} Brieskorn germs, {generic} generic forms"


def criterion_12():
    for n in range(1, 5):
        for d in range(1, 6):
            chi = 1 + (-1) ** (n - 1) * (d - 1) ** n
            check(milnor_zeta(simplex_poly(n, d)) == Z({d: chi // d}), f"n={n}, d={d}")
    return "n <= 4, d <= 5"


def _dilated(k, d):
    return [tuple(d * (i == j) for j in range(k)) for i in range(k)]


def _random_support(rng, n, size, top):
    pts = set()
    while len(pts) < size:
        p = tuple(rng.randint(0, top) for _ in range(n))
        if any(p):
            pts.add(p)
    return sorted(pts)


def criterion_13():
    for k in range(1, 5):
        for d in range(1, 7):
            a = Covector(tuple(range(k)), (1,) * k)
            check(normalized_volume(_dilated(k, d), a) == d ** (k - 1), f"volume k={k}, d={d}")
    rng = random.Random(13)
    pairs = 0
    while pairs < 200:
        n = rng.choice([2, 3])
        F = _random_support(rng, n, rng.randint(1, 5), 4)
        G = _random_support(rng, n, rng.randint(1, 4), 4)
        I = tuple(range(n))
        for a in pair_face_normals(F, G, I):
            fF, fG = face_of(F, a), face_of(G, a)
            vs = mixed_volumes(fF, fG, a)  # raises unless every V_j is a nonnegative integer
            check(all(isinstance(v, int) and v >= 0 for v in vs), "integrality")
            check(mixed_volume_sum(fF, fG, a) == mixed_volume_sum(fG, fF, a), "symmetry")
            p = next(iter(fG))
            check(mixed_volume_sum(fF, [p], a) == normalized_volume(fF, a), "point absorption")
            pairs += 1
    brute = 0
    for seed in range(30):
        r = random.Random(1000 + seed)
        n = r.choice([2, 3])
        F = _random_support(r, n, r.randint(1, 6), 4)
        G = _random_support(r, n, r.randint(1, 3), 3)
        for k in range(1, n + 1):
            for I in combinations(range(n), k):
                inside = [p for p in F if all(p[j] == 0 for j in range(n) if j not in I)]
                ginside = [p for p in G if all(p[j] == 0 for j in range(n) if j not in I)]
                if not inside or not ginside:
                    continue
                got = [b.weights for b in pair_face_normals(F, G, I)]
                check(got == brute_force_normals(F, G, I), f"normals of {F}, {G} on {I}")
                brute += 1
    return f"d*simplex volumes, {pairs} random face pairs, {brute} brute-force comparisons"


def criterion_14():
    rng = random.Random(14)
    for _ in range(300):
        z = Z({rng.randint(1, 15): rng.randint(-6, 6) for _ in range(rng.randint(0, 6))})
        check(parse_zeta(format_zeta(z)) == z, format_zeta(z))
    names = ["u", "v", "w"]
    for _ in range(300):
        n = rng.randint(1, 3)
        terms = {tuple(rng.randint(0, 4) for _ in range(n)): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))}
        p = Poly(n, terms)
        check(parse_poly(format_poly(p, names[:n]), names[:n]) == p, format_poly(p, names[:n]))
        d = max(p.total_degree(), 0)
        h = homogenize(p, d)
        check(h.is_homogeneous(), "homogenize")
        if p.total_degree() == d:
            check(chart(h, 0) == p, f"chart of homogenization of {format_poly(p)}")
    return "300 zeta and 300 polynomial round trips, homogenize/chart identity"


CRITERIA = [
    (1, "Example 1, d0 > d", criterion_1),
    (2, "Example 1, d0 = d", criterion_2),
    (3, "Example 1, d0 < d", criterion_3),
    (4, "Example 2 strata and global zeta", criterion_4),
    (5, "subset contributions of a three-variable pair", criterion_5),
    (6, "Example 3, d0 > d", criterion_6),
    (7, "Example 3, d0 < d", criterion_7),
    (8, "Example 4", criterion_8),
    (9, "degree equals chi", criterion_9),
    (10, "pair formula with a unit", criterion_10),
    (11, "Kouchnirenko oracle", criterion_11),
    (12, "Lefschetz oracle", criterion_12),
    (13, "lattice kernel", criterion_13),
    (14, "round trips", criterion_14),
]


def run_criterion(number, title, fn):
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except Exception as exc:  # report any failure as FAIL
        detail = f"{type(exc).__name__}: {exc}"
        ok = False
    elapsed = time.perf_counter() - start
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail}; {elapsed:.2f}s)")
    return ok, detail


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = run_criterion(number, title, fn)
    assert ok, detail


if __name__ == "__main__":
    results = [run_criterion(*c)[0] for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
