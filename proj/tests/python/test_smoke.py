"""Smoke tests for the python extension (golden values + API shape)."""

from fractions import Fraction

import pytest

import wptri


def test_count_golden():
    assert wptri.count(19, 77, 12, 1528) == 70
    assert wptri.count(1235, 6545, 2652, 1710721) == 70
    assert wptri.count(1, 1, 1, 2) == 6
    assert wptri.count(2, 2, 3, 1) == 0


def test_exact_primitives():
    g, x, y = wptri.gcd_ext(1235, 6545)
    assert g == 5 and 1235 * x + 6545 * y == 5
    assert wptri.mod_inverse(7, 19) == 11
    assert wptri.canonical_residue(-8, 19) == 11
    assert wptri.frac_part(Fraction(-3, 5)) == Fraction(2, 5)


def test_big_integers_survive_the_boundary():
    d = 10**30
    w = 10**18 + 9
    # round-trips through python ints without truncation
    assert wptri.canonical_residue(d, w) == d % w
    assert wptri.count(10**6, 999999, 999998, 10**12) > 0


def test_correction_terms():
    assert wptri.correction_r(19, 77, 12, 1528) == Fraction(-7, 19)
    assert wptri.correction_r(77, 19, 12, 1528) == Fraction(-38, 77)
    assert wptri.correction_r(12, 19, 77, 1528) == Fraction(-4, 3)
    assert wptri.correction_r_global(19, 77, 12, 1528) == Fraction(-9635, 4389)
    assert wptri.quadratic_term(19, 77, 12, 1528) == Fraction(312476, 4389)
    chain = wptri.correction_chain(19, 12, 8)
    assert [s.contribution for s in chain.steps] == [
        Fraction(-40, 57),
        Fraction(1, 3),
        Fraction(-1, 5),
        Fraction(9, 20),
        Fraction(-1, 4),
    ]
    assert chain.value == Fraction(-7, 19)


def test_delta_invariant_bridge():
    assert wptri.delta_invariant(19, 1, 12, 11) == Fraction(7, 19)
    assert wptri.a_count(19, 7, 12) == 19
    assert wptri.delta_comb(19, 7, 12) == Fraction(354, 19)
    for k in range(-20, 20):
        assert wptri.correction_r(31, 7, 12, k) == -wptri.delta_invariant(
            31, 7, 12, -k
        )


def test_reduction():
    red = wptri.reduce(1235, 6545, 2652, 1710721)
    assert red.v == (19, 77, 12)
    assert red.e == 1528
    assert red.r == (1, 2, 3)
    assert (red.w01, red.w02, red.w12) == (5, 13, 17)


def test_oracles_agree():
    for w0, w1, w2, d in [(3, 5, 7, 200), (2, 2, 3, 51), (6, 10, 15, 180)]:
        brute = wptri.count_bruteforce(w0, w1, w2, d)
        assert wptri.count(w0, w1, w2, d) == brute
        assert wptri.count_series(w0, w1, w2, d) == brute


def test_triples():
    triples = wptri.bruteforce_triples(19, 77, 12, 1528)
    assert len(triples) == 70
    assert all(19 * i + 77 * j + 12 * k == 1528 for i, j, k in triples)
    assert (0, 8, 76) in triples and (76, 0, 7) in triples


def test_hj_geometry():
    h = wptri.hj_expand(19, 12)
    assert (h.c, h.q, h.qbar) == ([2, 3, 2, 3], [12, 5, 3, 1], [1, 2, 5, 8])
    assert len(h) == 4
    assert wptri.relative_canonical(h) == [
        Fraction(-6, 19),
        Fraction(-12, 19),
        Fraction(-11, 19),
        Fraction(-10, 19),
    ]
    ed = [Fraction(11, 19), Fraction(22, 19), Fraction(17, 19), Fraction(12, 19)]
    assert wptri.delta_top(h, ed) == Fraction(45, 19)
    assert wptri.lct(19, 12) == Fraction(7, 19)
    assert wptri.gorenstein_index(19, 12) == 19
    assert wptri.canonical_multiple_degree(19, 12, 14) == 8
    m = wptri.intersection_matrix(h)
    assert m[0][0] == -2 and m[1][1] == -3 and m[0][1] == 1


def test_blache_reports():
    diff = wptri.blache_diff_report(19, 12)
    assert diff.holds
    assert diff.bound == Fraction(12, 19)
    assert [e.diff for e in diff.entries[:4]] == [
        Fraction(3, 19),
        Fraction(6, 19),
        Fraction(10, 19),
        Fraction(12, 19),
    ]
    assert [e.ell for e in diff.entries if e.attains_bound] == [4, 15]
    bound = wptri.blache_bound_report(19, 12)
    assert bound.holds and bound.index == 19


def test_unity_checks():
    assert abs(wptri.r_via_roots(19, 77, 12, 1528) - (-7 / 19)) < 1e-9
    assert abs(wptri.unity_sum_identity(360) - 179.5) < 1e-9


def test_errors():
    with pytest.raises(wptri.NotCoprimeError):
        wptri.mod_inverse(6, 9)
    with pytest.raises(wptri.InvalidTypeError):
        wptri.hj_expand(10, 4)
    with pytest.raises(wptri.TooLargeError):
        wptri.count_bruteforce(1, 1, 1, 10**9)
    with pytest.raises(wptri.Error):
        wptri.correction_r_global(2, 4, 5, 3)


def test_verify_runs_clean():
    report = wptri.verify(max_weight=12, max_degree=80, seed=3, cases=40)
    assert report.ok(), [c.detail for c in report.checks if not c.ok()]
    assert report.worst_float_error < 1e-8
    assert report.total_cases() > 0
