"""Acceptance criteria, one test per criterion.

Each test prints one PASS line on success (pytest -v adds its own
pass/fail line per criterion as well) and asserts the stated tolerance,
including wall-clock budgets where the criterion fixes one.  Criteria 1-3
compare closed-form spectra against full brute-force matrix enumeration;
4 checks the full-orthogonal-group spectrum equality; 5-8 run the
derivation grids; 9 records the agreed scope boundary.
"""

from __future__ import annotations

import time

import pytest

from ordspec import oracle, spectra, verify, zsigmondy


@pytest.fixture(autouse=True)
def _no_cache(monkeypatch):
    # enumeration criteria must measure honest compute, never a disk cache
    monkeypatch.delenv("ORDSPEC_CACHE_DIR", raising=False)


def _enumeration_matches(family: str, dim: int, q: int, n: int,
                         want_order: int, budget: float) -> float:
    t0 = time.perf_counter()
    order, _, enumerated = oracle.enumerate_group(family, dim, q)
    elapsed = time.perf_counter() - t0
    closed = spectra.spectrum(spectra.group_id("Sp", n, q))
    assert order == want_order
    assert spectra.equals(closed, enumerated), (
        closed.gens, enumerated.gens,
    )
    assert elapsed < budget, f"enumeration took {elapsed:.1f}s, budget {budget}s"
    return elapsed


def test_criterion_1_s4_3_closed_form_equals_enumeration() -> None:
    elapsed = _enumeration_matches("Sp", 4, 3, n=2, want_order=51840, budget=60.0)
    print(f"PASS: criterion 1: omega(S4(3)) == Sp4(3)/centre enumeration "
          f"(25920 cosets), exact, {elapsed:.1f}s < 60s")


def test_criterion_2_s4_4_closed_form_equals_enumeration() -> None:
    elapsed = _enumeration_matches("Sp", 4, 4, n=2, want_order=979200, budget=300.0)
    print(f"PASS: criterion 2: omega(S4(4)) == Sp4(4) enumeration "
          f"(979200 elements), exact, {elapsed:.1f}s < 300s")


def test_criterion_3_s6_2_closed_form_equals_enumeration() -> None:
    elapsed = _enumeration_matches("Sp", 6, 2, n=3, want_order=1451520, budget=600.0)
    print(f"PASS: criterion 3: omega(S6(2)) == Sp6(2) enumeration "
          f"(1451520 elements), exact, {elapsed:.1f}s < 600s")


def test_criterion_4_go8_spectrum_equality() -> None:
    worst = 0.0
    for q in (2, 4, 8, 16):
        t0 = time.perf_counter()
        report = verify.check_go8_equality(q)
        elapsed = time.perf_counter() - t0
        worst = max(worst, elapsed)
        assert report.passed, verify.summary(report)
        assert elapsed < 1.0, f"q={q} took {elapsed:.2f}s, budget 1s"
    for q in (2, 4, 8, 16, 32):
        assert oracle.twisted_order_b_gamma(q) == 8, q
    group = oracle.close_group(oracle.standard_generators("GOplus", 4, 2))
    assert len(group) == 72
    assert spectra.contains(oracle.element_orders(group), 4)
    print(f"PASS: criterion 4: omega(S8(q)) == omega(GO8-(q)) for "
          f"q in 2,4,8,16 (worst {worst:.2f}s < 1s); twisted order 8 "
          f"through q=32; 4 in omega(GO4+(2)) by 72-element enumeration")


def test_criterion_5_spectrum_difference_grid() -> None:
    config = {
        "checks": [
            c for c in verify.default_config()["checks"] if c["kind"] == "diff"
        ]
    }
    assert len(config["checks"]) > 100
    reports = verify.run_suite(config)
    failing = [r.check_id for r in reports if not r.passed]
    assert not failing, failing

    controls = verify.run_suite({"checks": [
        {"kind": "membership", "family": "Bn", "n": 3, "q": 3,
         "value": 30, "expected": True},
        {"kind": "membership", "family": "Sp", "n": 2, "q": 3,
         "value": 7, "expected": True},
    ]})
    for report in controls:
        assert not report.passed
        assert report.claims[0].witness, report.check_id
    assert controls[0].claims[0].witness == (30,)
    print(f"PASS: criterion 5: {len(reports)} spectrum-difference checks "
          f"pass; 2 negative controls fail with witnesses")


def test_criterion_6_zsigmondy_sweep_and_containments() -> None:
    t0 = time.perf_counter()
    gaps = [
        (q, n)
        for n in range(3, 41)
        for q in range(2, 51)
        if not zsigmondy.has_primitive_prime_divisor(q, n)
    ]
    assert gaps == [(2, 6)], gaps

    for q in (2, 3, 4, 5, 7, 8, 9, 11):
        for n in range(1, 15):
            rs = set(zsigmondy.primitive_prime_divisors(q, n))
            # soundness: each reported prime divides q^n - 1 and no earlier
            for r in rs:
                assert (q**n - 1) % r == 0, (q, n, r)
                assert all((q**i - 1) % r != 0 for i in range(1, n)), (q, n, r)
            # completeness: every prime new at level n is reported
            from ordspec import arith

            new = {
                r
                for r in arith.factorize(q**n - 1).primes
                if all((q**i - 1) % r != 0 for i in range(1, n))
            }
            assert rs == new, (q, n, rs, new)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"sweep took {elapsed:.1f}s, budget 30s"
    print(f"PASS: criterion 6: unique existence gap (q,n)=(2,6) on "
          f"3<=n<=40, 2<=q<=50; soundness and completeness of R_n(q) on "
          f"the grid; {elapsed:.1f}s < 30s")


def test_criterion_7_adjacency_grids() -> None:
    count = 0
    for q in (2, 3, 4, 5):
        for n in (5, 6):
            families = ["Sp"] + (["Bn"] if q % 2 else [])
            ks = [2 * n, 2 * n - 2] + ([n - 1] if n % 2 == 0 else [])
            for fam in families:
                group = spectra.group_id(fam, n, q)
                for k in ks:
                    report = verify.check_adjacency("adj_s", group, k)
                    assert report.passed, verify.summary(report)
                    count += 1
    for q in (2, 3):
        group = spectra.group_id("Dplus", 6, q)
        for k in (10, 5):
            report = verify.check_adjacency("adj_o", group, k)
            assert report.passed, verify.summary(report)
            count += 1
    print(f"PASS: criterion 7: {count} adjacency checks pass as "
          f"generator-level properties (adj_s n=5,6 q=2,3,4,5 all k "
          f"branches; adj_o n=6 q=2,3)")


def test_criterion_8_coclique_witnesses() -> None:
    count = 0
    for n, q in ((5, 2), (5, 3), (7, 2)):
        report = verify.check_coclique_witness("n_odd", n, q)
        assert report.passed, verify.summary(report)
        count += 1
    for n, q in ((6, 2), (6, 3), (8, 2)):
        for case in ("n_even", "dplus"):
            report = verify.check_coclique_witness(case, n, q)
            assert report.passed, verify.summary(report)
            count += 1
    print(f"PASS: criterion 8: {count} coclique-witness checks pass, "
          f"including the (8,2) substitution, quantified over every "
          f"primitive-divisor choice")


def test_criterion_9_scope_note() -> None:
    # Drawing structural conclusions about every group sharing a spectrum
    # needs cohomology and representation facts beyond finite set
    # computation; criteria 1-8 cover the arithmetic facts such arguments
    # consume, and that is the agreed acceptance boundary.
    print("PASS: criterion 9: scope note acknowledged (no computation)")
