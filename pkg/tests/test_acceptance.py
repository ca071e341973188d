"""Exit criteria.  Each test records one PASS/FAIL line shown in the pytest summary."""

import itertools
import time

import numpy as np
import pytest

from conftest import TERNARY_ROWS, SENARY_ROWS, record_acceptance
from mspotty.codes import ByteLayout, span
from mspotty.macwilliams import s_value, s_value_sweep, transform, v_table, verify_identity
from mspotty.poly import Poly
from mspotty.rings import build
from mspotty.weights import distribution, enumerator, mspotty_distance, rt_weight

TERNARY_TABLE = {(3, 0, 0, 0): 1, (0, 1, 1, 1): 4, (1, 0, 1, 1): 2, (0, 2, 1, 0): 2}
SENARY_TABLE = {(2, 0, 0, 0): 1, (0, 0, 0, 2): 18, (0, 1, 0, 1): 1, (0, 0, 1, 1): 3, (0, 1, 1, 0): 1}
TERNARY_W = Poly([1, 0, 0, 4, 4])
SENARY_W = Poly([1, 0, 1, 4, 18])
TERNARY_DUAL = Poly([1, 10, 24, 116, 542, 846, 648])
SENARY_DUAL = Poly([1, 4, 61, 528, 1350])
V_Z3 = [Poly([1, 8, 18]), Poly([1, 8, -9]), Poly([1, -1]), Poly([1, -1])]
V_Z6 = [Poly([1, 35, 180]), Poly([1, 35, -36]), Poly([1, -1]), Poly([1, -1])]

ORACLE_GRID = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "F(2,2)", "F(2,3)", "F(3,2)",
              "chain(2,1,2)", "Rk(2)", "GR(2,2,2)", "prod(Z2,Z3)"]

# (ring, n, b); every ambient space has at most 2 * 10^6 vectors
RANDOM_CONFIGS = [
    ("Z2", 4, 5), ("Z4", 3, 3), ("Z6", 2, 3), ("Z8", 2, 3),
    ("F(2,2)", 3, 3), ("F(3,2)", 2, 3), ("GR(2,2,2)", 1, 5), ("chain(2,1,2)", 2, 5),
    ("chain(3,1,2)", 3, 2), ("Rk(1)", 2, 4), ("Rk(2)", 2, 2), ("prod(Z2,Z3)", 2, 3),
]
MATRICES_PER_CONFIG = 5


def _end_to_end(ring_text, layout, rows, table, W, dual_size, W_dual):
    start = time.perf_counter()
    C = span(build(ring_text), layout, rows)
    dist = distribution(C)
    rep = verify_identity(C)
    elapsed = time.perf_counter() - start
    checks = {
        "|C|": C.cardinality == sum(table.values()),
        "table": dist.counts == table,
        "W": enumerator(dist) == W,
        "|C_dual|": rep.dual_card == dual_size,
        "transform": rep.via_transform == W_dual,
        "dual sweep": rep.via_dual == W_dual,
        "runtime": elapsed < 5.0,
    }
    return checks, elapsed, rep


def test_criterion_1_ternary():
    checks, elapsed, rep = _end_to_end("Z3", ByteLayout(3, 3, 2), TERNARY_ROWS, TERNARY_TABLE, TERNARY_W, 2187, TERNARY_DUAL)
    ok = all(checks.values())
    record_acceptance(1, ok, f"ternary code, |C_dual|={rep.dual_card}, W_dual={rep.via_dual}, {elapsed:.2f}s")
    assert ok, checks


def test_criterion_2_senary():
    checks, elapsed, rep = _end_to_end("Z6", ByteLayout(2, 3, 2), SENARY_ROWS, SENARY_TABLE, SENARY_W, 1944, SENARY_DUAL)
    ok = all(checks.values())
    record_acceptance(2, ok, f"Z6 code, |C_dual|={rep.dual_card}, W_dual={rep.via_dual}, {elapsed:.2f}s")
    assert ok, checks


def test_criterion_3_reference_v_tables():
    ok = list(v_table(3, 3, 2).polys) == V_Z3 and list(v_table(6, 3, 2).polys) == V_Z6
    record_acceptance(3, ok, "v_table(3,3,2) and v_table(6,3,2) coefficient-exact")
    assert ok


def test_criterion_4_character_sum_grid():
    start = time.perf_counter()
    mismatches, checked = [], 0
    for text in ORACLE_GRID:
        R = build(text)
        for b in (1, 2, 3):
            V, js, S = s_value_sweep(R, b)
            for c, j, row in zip(V, js, S):
                for k in range(b + 1):
                    checked += 1
                    if row[k] != s_value(R.order, b, k, int(j)):
                        mismatches.append((text, b, tuple(c), k, int(j), row[k]))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60
    record_acceptance(4, ok, f"{checked} (ring, b, witness, k) sums, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert not mismatches, mismatches[:10]
    assert elapsed < 60


def _random_codes():
    rng = np.random.default_rng(20121102)
    for text, n, b in RANDOM_CONFIGS:
        R = build(text)
        assert R.order ** (n * b) <= 2 * 10 ** 6
        for _ in range(MATRICES_PER_CONFIG):
            k = int(rng.integers(1, 4))
            t = int(rng.integers(1, b + 1))
            rows = rng.integers(0, R.order, size=(k, n * b))
            yield span(R, ByteLayout(n, b, t), rows)


@pytest.fixture(scope="module")
def random_reports():
    start = time.perf_counter()
    out = [(C, verify_identity(C)) for C in _random_codes()]
    return out, time.perf_counter() - start


def test_criterion_5_random_identity(random_reports):
    reports, elapsed = random_reports
    start = time.perf_counter()
    failures = []
    for C, rep in reports:
        D = rep.dual_code
        vt = v_table(C.ring.order, C.layout.b, C.layout.t)
        if not rep.equal:
            failures.append((C, "identity"))
        if C.cardinality * D.cardinality != C.ring.order ** C.layout.N:
            failures.append((C, "|C||C_dual|"))
        if transform(distribution(D), D.cardinality, vt) != enumerator(distribution(C)):
            failures.append((C, "involution"))
    elapsed += time.perf_counter() - start
    families = {C.ring.spec.family for C, _ in reports}
    ok = not failures and len(reports) >= 50 and len(families) >= 5 and elapsed < 300
    record_acceptance(5, ok, f"{len(reports)} random codes over {len(families)} families, "
                             f"{len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert len(reports) >= 50 and len(families) >= 5
    assert elapsed < 300


def test_criterion_6_metric_axioms():
    rng = np.random.default_rng(25)
    violations, checked = 0, 0
    for text in ("Z6", "F(2,2)"):
        R = build(text)
        for t in (1, 2, 3):
            layout = ByteLayout(3, 3, t)
            for _ in range(10 ** 4):
                c, v, w = (tuple(int(x) for x in rng.integers(0, R.order, layout.N)) for _ in range(3))
                if rng.random() < 0.05:
                    v = c
                d = lambda x, y: mspotty_distance(R, x, y, layout)  # noqa: E731
                dcv, dvc, dvw, dcw = d(c, v), d(v, c), d(v, w), d(c, w)
                checked += 1
                violations += (
                    dcv < 0
                    or (dcv == 0) != (c == v)
                    or dcv != dvc
                    or dcw > dcv + dvw
                )
    ok = violations == 0
    record_acceptance(6, ok, f"{checked} random triples over Z6 and GF(4), b=3, t=1..3, {violations} violations")
    assert violations == 0


def test_criterion_7_structural_invariants(random_reports):
    problems = []
    for ell in range(2, 10):
        for b in range(1, 6):
            for t in range(1, b + 1):
                vt = v_table(ell, b, t)
                if vt[0](1) != ell ** b or any(vt[j](1) != 0 for j in range(1, b + 1)):
                    problems.append(("V(1)", ell, b, t))

    reports, _ = random_reports
    codes = [C for C, _ in reports]
    codes += [span(build("Z3"), ByteLayout(3, 3, 2), TERNARY_ROWS), span(build("Z6"), ByteLayout(2, 3, 2), SENARY_ROWS)]
    verified = {id(C): rep for C, rep in reports}
    for C in codes:
        rep = verified.get(id(C)) or verify_identity(C)
        if enumerator(distribution(C))(1) != C.cardinality:
            problems.append(("W(1)", C))
        if rep.via_transform(1) * C.cardinality != C.ring.order ** C.layout.N:
            problems.append(("W_dual(1)", C))

    # t = 1: the pipeline is the plain RT-metric MacWilliams identity
    plain_checked = 0
    for C in codes[:: max(1, len(codes) // 15)] + codes[-2:]:
        if C.ring.order ** C.layout.N > 300_000:
            continue
        C1 = C.with_t(1)
        rep = verify_identity(C1)
        b, n = C.layout.b, C.layout.n

        def plain(words):
            out = Poly([0])
            for w in words:
                out = out + Poly.monomial(sum(rt_weight(w[i * b:(i + 1) * b]) for i in range(n)))
            return out

        plain_checked += 1
        if not (rep.equal and enumerator(distribution(C1)) == plain(C1.words)
                and rep.via_transform == plain(rep.dual_code.words)):
            problems.append(("t=1", C))
    ok = not problems
    record_acceptance(7, ok, f"V grid ell=2..9, b=1..5; W(1), W_dual(1) on {len(codes)} codes; "
                             f"t=1 on {plain_checked} codes; {len(problems)} problems")
    assert not problems, problems[:5]


def test_acceptance_grid_uses_every_family():
    families = {build(t).spec.family for t in ORACLE_GRID}
    assert families == {"Z", "F", "chain", "Rk", "GR", "prod"}
    assert len(list(itertools.islice(_random_codes(), 3))) == 3
