"""The nine-step check suite: gating, passing runs, and forced failures."""

from fractions import Fraction

import pytest

from altcomm import (LEMMA_IDS, LinearMap, Matrix, RationalField, find_unit,
                     random_commuting_map, run_all, run_lemma)
from altcomm.lemmas import _EVALS

Q = RationalField()


def transpose_map(algebra):
    n = 2
    cols = []
    for i in range(n):
        for j in range(n):
            c = [Fraction(0)] * algebra.dim
            c[j * n + i] = Fraction(1)
            cols.append(c)
    return LinearMap(algebra, Matrix.from_columns(Q, cols))


def test_lemma_ids_are_ordered():
    assert LEMMA_IDS == tuple(f"L{k}" for k in range(1, 10))


def test_all_pass_on_builtins(m2q_pd, m3q_pd, zornq_pd, m2f5_pd, zornf5_pd):
    for pd in (m2q_pd, m3q_pd, zornq_pd, m2f5_pd, zornf5_pd):
        for seed in (0, 7, 31):
            phi = random_commuting_map(pd.algebra, seed)
            reports = run_all(pd, phi)
            assert [r.lemma_id for r in reports] == list(LEMMA_IDS)
            for r in reports:
                assert r.passed, (pd.algebra.name, seed, r.lemma_id, r.notes)
                assert r.witness is None
                assert r.notes


def test_identity_map_passes(zornq_pd):
    reports = run_all(zornq_pd, LinearMap.identity(zornq_pd.algebra))
    assert all(r.passed for r in reports)


def test_single_lemma_matches_run_all(m3q_pd):
    phi = random_commuting_map(m3q_pd.algebra, 5)
    full = {r.lemma_id: r for r in run_all(m3q_pd, phi)}
    for lid in LEMMA_IDS:
        single = run_lemma(lid, m3q_pd, phi)
        assert single.status == full[lid].status
        assert single.notes == full[lid].notes


def test_unknown_lemma_id(m2q_pd):
    with pytest.raises(ValueError):
        run_lemma("L10", m2q_pd, LinearMap.identity(m2q_pd.algebra))
    with pytest.raises(ValueError):
        run_lemma("l1", m2q_pd, LinearMap.identity(m2q_pd.algebra))


def test_non_commuting_map_blocks_everything(m2q_pd):
    reports = run_all(m2q_pd, transpose_map(m2q_pd.algebra))
    assert len(reports) == 9
    for r in reports:
        assert r.status == "not-applicable"
        assert not r.passed
        assert "not commuting" in r.notes
        assert r.witness["x"] == ["1", "0", "0", "0"]
        assert r.witness["y"] == ["0", "1", "0", "0"]


def test_failed_regularity_blocks_everything():
    from altcomm import direct_sum, peirce_decompose, scalar_algebra
    d = direct_sum(scalar_algebra(Q), scalar_algebra(Q))
    pd = peirce_decompose(d, d.element([Fraction(1), Fraction(0)]))
    reports = run_all(pd, LinearMap.identity(d))
    for r in reports:
        assert r.status == "not-applicable"
        assert "regularity" in r.notes
        assert r.witness["kernel_element"] == ["0", "1"]


def test_ungated_evaluation_exposes_failures(m2q_pd):
    """Bypassing the gate shows which equations a bad map actually breaks."""
    algebra = m2q_pd.algebra
    cases = {
        "transpose": (transpose_map(algebra), {"L5"}),
        "left mult by e11": (
            LinearMap.left_multiplication(algebra, m2q_pd.e1), {"L5", "L6"}),
    }
    for label, (phi, expected_failures) in cases.items():
        failed = set()
        for lid in LEMMA_IDS:
            ok, witness, notes = _EVALS[lid](m2q_pd, phi)
            if not ok:
                failed.add(lid)
                assert witness, (label, lid)
                assert notes
        assert failed == expected_failures, label


def test_report_to_dict(m2f5_pd):
    phi = random_commuting_map(m2f5_pd.algebra, 2)
    r = run_lemma("L7", m2f5_pd, phi)
    d = r.to_dict()
    assert d == {"lemma_id": "L7", "status": "pass",
                 "witness": None, "notes": r.notes}


def test_notes_mention_what_was_checked(zornq_pd):
    phi = random_commuting_map(zornq_pd.algebra, 7)
    notes = {r.lemma_id: r.notes for r in run_all(zornq_pd, phi)}
    # the off-diagonal components of the octonion-like algebra are 3-dim
    assert "3" in notes["L5"] or "basis" in notes["L5"]
    assert notes["L1"] != notes["L2"]
