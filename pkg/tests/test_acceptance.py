"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import numpy as np
import pytest

from _oracles import naive_parity_table
from conftest import ACCEPTANCE_LOG
from quadric_k0.clifford import clifford, regular_representation, sign_parity_table
from quadric_k0.errors import LowDimension
from quadric_k0.fields import QQ, FieldProfile, PrimeField
from quadric_k0.geometry import RealCase, real_geometry
from quadric_k0.labels import (
    AlgebraLabel,
    Base,
    K0Class,
    abs_group,
    closed_form_k0,
    clifford_of_signature,
    definite_clifford,
    simple_dim,
    with_size,
)
from quadric_k0.tables import render_table
from quadric_k0.verify import sweep
from quadric_k0.witnesses import verify_witness_iso, witness_suite
from test_tables import GOLDEN

QD, L2, L1 = FieldProfile.QUATERNION_DIVISION, FieldProfile.SUM_TWO_SQUARES, FieldProfile.SQRT_MINUS_ONE
K, C, H = Base.K, Base.C, Base.H


def report(number, ok, detail, elapsed, limit=None):
    within = limit is None or elapsed < limit
    verdict = "PASS" if ok and within else "FAIL"
    bound = f" limit={limit:g}s" if limit is not None else ""
    line = f"criterion {number:>2} {verdict} {detail} time={elapsed:.2f}s{bound}"
    print(line)
    ACCEPTANCE_LOG.append(line)
    assert ok, line
    assert within, line


# C_n, C_n', d(q_n), d(q_n') for n = 1..8, read off the printed table
FIRST_TABLE = [
    (AlgebraLabel(C), AlgebraLabel(K, 0, True), 2, 1),
    (AlgebraLabel(H), AlgebraLabel(K, 1), 4, 2),
    (AlgebraLabel(H, 0, True), AlgebraLabel(C, 1), 4, 4),
    (AlgebraLabel(H, 1), AlgebraLabel(H, 1), 8, 8),
    (AlgebraLabel(C, 2), AlgebraLabel(H, 1, True), 8, 8),
    (AlgebraLabel(K, 3), AlgebraLabel(H, 2), 8, 16),
    (AlgebraLabel(K, 3, True), AlgebraLabel(C, 3), 8, 16),
    (AlgebraLabel(K, 4), AlgebraLabel(K, 4), 16, 16),
]


def test_criterion_01_first_table():
    t0 = time.perf_counter()
    bad = 0
    for n, (cn, cnp, d, dp) in enumerate(FIRST_TABLE, start=1):
        minus, plus = clifford_of_signature(QD, 0, n), clifford_of_signature(QD, n, 0)
        cells = [minus == cn, plus == cnp, 1 << simple_dim(minus) == d, 1 << simple_dim(plus) == dp]
        bad += cells.count(False)
    report(1, bad == 0, f"cells=32 mismatches={bad}", time.perf_counter() - t0, 1)


def _golden_cells(kind, profile, period):
    t0 = time.perf_counter()
    cells = bad = 0
    for r in range(5):
        got = render_table(profile, kind, r=r).splitlines()[1:]
        want = (GOLDEN / f"{kind.replace('-', '_')}_r{r}.txt").read_text().splitlines()[1:]
        assert len(got) == len(want) == period
        for g, w in zip(got, want):
            gc, wc = g.split()[1:], w.split()[1:]  # drop n=, keep the six label/size columns
            cells += len(wc) + 1
            bad += sum(a != b for a, b in zip(gc, wc)) + (g.split()[0] != w.split()[0])
    return cells, bad, time.perf_counter() - t0


def test_criterion_02_sixteen_r_table():
    cells, bad, dt = _golden_cells("paper-8r", QD, 8)
    report(2, cells == 280 and bad == 0, f"cells={cells} mismatches={bad}", dt, 1)


def test_criterion_03_four_r_table():
    cells, bad, dt = _golden_cells("paper-4r", L2, 4)
    report(3, cells == 140 and bad == 0, f"cells={cells} mismatches={bad}", dt, 1)


def test_criterion_04_closed_forms():
    t0 = time.perf_counter()
    cases = bad = 0
    for profile in (L1, L2, QD):
        for n in range(65):
            for m in range(65):
                if n + m == 0:
                    continue
                cases += 1
                bad += abs_group(profile, n, m).k0 is not closed_form_k0(profile, n, m)
    # 3 profiles x (65^2 - 1) signatures
    report(4, cases == 3 * (65 * 65 - 1) and bad == 0, f"cases={cases} mismatches={bad}", time.perf_counter() - t0, 5)


_SWEEPS = {}


def _sweep(primes):
    if primes not in _SWEEPS:
        t0 = time.perf_counter()
        records = sweep(primes, 8)
        _SWEEPS[primes] = (records, time.perf_counter() - t0)
    return _SWEEPS[primes]


@pytest.mark.slow
@pytest.mark.parametrize("number, primes", [(5, (5, 13, 17)), (6, (7, 11, 19))])
def test_criterion_05_06_oracle(number, primes):
    records, dt = _sweep(primes)
    bad = sum(not r.match for r in records)
    expected_cases = sum(rank + 1 for rank in range(1, 9)) * 3
    report(number, len(records) == expected_cases and bad == 0,
           f"primes={','.join(map(str, primes))} cases={len(records)} mismatches={bad}", dt, 600)


def test_criterion_07_witnesses():
    t0 = time.perf_counter()
    certs = [verify_witness_iso(name, QQ) for name in ("CxC", "HxC", "HxH")]
    for field in (QQ, PrimeField(5), PrimeField(7)):
        certs.extend(witness_suite(field))
    failures = [c.render() for c in certs if not c.passed]
    per_field = {}
    for c in certs:
        if c.name.startswith("SCALED"):
            per_field.setdefault(c.field.descriptor, set()).add(c.name.split(";")[0])
    forms = sorted(len(v) for v in per_field.values())
    ok = not failures and forms == [4, 4, 4]
    report(7, ok, f"witnesses={len(certs)} failures={len(failures)} binary_forms_per_field={forms}",
           time.perf_counter() - t0, 120)


@pytest.mark.slow
def test_criterion_08_structural_properties():
    t0 = time.perf_counter()
    records = _sweep((5, 13, 17))[0] + _sweep((7, 11, 19))[0]
    violations = sum(len(r.lemma_violations) for r in records)
    report(8, violations == 0, f"cases={len(records)} violations={violations}", time.perf_counter() - t0)


def test_criterion_09_periodicity():
    t0 = time.perf_counter()
    bad = checks = 0
    for profile, period, shift in ((QD, 8, 4), (L2, 4, 2), (L1, 2, 1)):
        for n in range(65 - period):
            for positive in (True, False):
                checks += 1
                bad += definite_clifford(profile, n + period, positive) != with_size(
                    definite_clifford(profile, n, positive), shift)
        for n in range(65):
            for m in range(65):
                if n == m:
                    continue
                checks += 1
                ref = abs_group(profile, n - m, 0) if n > m else abs_group(profile, 0, m - n)
                got = abs_group(profile, n, m)
                bad += (got.k0 is not ref.k0) or (got.dperp_log2 - got.d_log2 != ref.dperp_log2 - ref.d_log2)
    report(9, bad == 0, f"checks={checks} mismatches={bad}", time.perf_counter() - t0, 5)


def test_criterion_10_real_geometry():
    t0 = time.perf_counter()
    bad = cases = 0
    expected = {RealCase.SPHERE: (K0Class.Z, K0Class.Z_MOD_2),
                RealCase.NO_REAL_POINTS: (K0Class.ZERO, K0Class.ZERO),
                RealCase.INDEFINITE: (K0Class.ZERO, K0Class.ZERO)}
    for n in range(17):
        for m in range(17 - n):
            if n + m == 0:
                continue
            cases += 1
            if n == 0:
                want = RealCase.NO_REAL_POINTS
            elif n + m < 3:
                try:
                    real_geometry(n, m)
                    bad += 1
                except LowDimension:
                    pass
                continue
            else:
                want = RealCase.SPHERE if m == 0 else RealCase.INDEFINITE
            rep = real_geometry(n, m)
            bad += rep.case_tag is not want or (rep.euler_class_group, rep.chow_group) != expected[want]
    report(10, bad == 0, f"cases={cases} mismatches={bad}", time.perf_counter() - t0)


def test_criterion_11_engine():
    t0 = time.perf_counter()
    parity_bad = int(np.count_nonzero(sign_parity_table(12) != naive_parity_table(12)))
    t_parity = time.perf_counter() - t0

    rng = np.random.default_rng(2024)
    assoc_bad = faithful_bad = 0
    specs = [((1, -1, 2, 3), 13), ((1, 1, 1, 1, 1), 7), ((-1, -1, 3, 5, -2, 1), 11)]
    for coeffs, p in specs:
        A = clifford(coeffs, PrimeField(p))
        X, Y, Z = (rng.integers(0, p, size=(10_000, A.dim)) for _ in range(3))
        for x, y, z in zip(X, Y, Z):
            assoc_bad += not np.array_equal(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z)))
    A = clifford((1, -1, 2, 3), PrimeField(13))
    L = regular_representation(A)
    X, Y = (rng.integers(0, 13, size=(1000, A.dim)) for _ in range(2))
    for x, y in zip(X, Y):
        faithful_bad += not np.array_equal(L.of(x) @ L.of(y) % 13, L.of(A.mul(x, y)))
    ok = parity_bad == 0 and assoc_bad == 0 and faithful_bad == 0 and t_parity < 60
    report(11, ok, f"parity_pairs={1 << 24} parity_bad={parity_bad} parity_time={t_parity:.1f}s "
           f"assoc_triples={10_000 * len(specs)} assoc_bad={assoc_bad} "
           f"faithful_pairs=1000 faithful_bad={faithful_bad}", time.perf_counter() - t0)
