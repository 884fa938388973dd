import random
from fractions import Fraction
from math import gcd

import pytest

from conftest import random_esch, random_free_esch, random_pc_esch
from eschbaz import (
    BazParams,
    EschParams,
    NormalFormError,
    NotPositivelyCurvedError,
    SingularCandidateError,
    candidate_q,
    certified_shift,
    collision_locus,
    dual_embedding,
    h6_order,
    homotopy_distinct_embeddings,
    is_free,
    is_free_baz,
    is_pc_baz,
    is_pc_metric,
    nonsingular_shift,
    pc_normal_form,
    pc_shift_window,
    shift,
    sigma3_shift_closed_form,
    window_scan,
)
from eschbaz.arith import elementary_symmetric
from eschbaz.embedding import COHOM1_WINDOW_NOTE, make_certificate, shift_prime_product

E_RUNNING = EschParams((2, 0, 0), (15, -2, -11))


def six_tuple(e, c):
    return tuple(2 * (x + c) + 1 for x in e.a) + tuple(-2 * (x + c) - 1 for x in e.b)


# ---------------------------------------------------------------------------
# candidate construction


def test_candidate_q_examples():
    assert candidate_q(E_RUNNING, 0) == BazParams((5, 1, 1, 3, 21))
    assert candidate_q(E_RUNNING, 2) == BazParams((9, 5, 5, -1, 17))
    assert candidate_q(E_RUNNING, -1) == BazParams((3, -1, -1, 5, 23))


def test_candidate_q_sum_identity():
    rng = random.Random(307)
    for _ in range(2000):
        e = random_esch(rng, -30, 30)
        c = rng.randint(-50, 50)
        q = candidate_q(e, c)
        assert q.qsum == 2 * (e.b[0] + c) + 1
        assert q.all_odd()


def test_candidate_q_shift_compatibility():
    rng = random.Random(311)
    for _ in range(2000):
        e = random_esch(rng, -30, 30)
        c = rng.randint(-50, 50)
        assert candidate_q(shift(e, c), 0) == candidate_q(e, c)


# ---------------------------------------------------------------------------
# non-singularity at a shift


def test_nonsingular_shift_examples():
    assert not nonsingular_shift(E_RUNNING, 0)
    assert nonsingular_shift(E_RUNNING, -1)
    assert nonsingular_shift(E_RUNNING, 5)


def test_nonsingular_shift_matches_candidate_freeness():
    rng = random.Random(313)
    for _ in range(10_000):
        e = random_esch(rng, -25, 25)
        c = rng.randint(-40, 40)
        assert nonsingular_shift(e, c) == is_free_baz(candidate_q(e, c)), (e, c)


def test_common_prime_divisors_are_odd():
    # for free parameters, any prime dividing both a_i + a_j + 1 and a_k - b_l
    # must be odd
    rng = random.Random(317)
    for _ in range(3000):
        e = random_free_esch(rng, -40, 40)
        for k in range(3):
            i, j = (x for x in range(3) if x != k)
            pair_sum = e.a[i] + e.a[j] + 1
            for bl in e.b:
                assert gcd(pair_sum, e.a[k] - bl) % 2 == 1


# ---------------------------------------------------------------------------
# certified shifts


def test_certified_shift_examples():
    assert certified_shift(E_RUNNING, 1, 1) == 4089800
    assert 4089800 == 2**3 * 5**2 * 11**2 * 13**2
    assert certified_shift(E_RUNNING, 2, 1) == 2 * 4089800**2
    assert certified_shift(EschParams((1, 1, 1), (3, 0, 0)), 1, 1) == 8


def test_certified_shift_sign_and_mu():
    assert certified_shift(E_RUNNING, 1, -1) == -4089800
    with pytest.raises(ValueError):
        certified_shift(E_RUNNING, 0, 1)
    with pytest.raises(ValueError):
        certified_shift(E_RUNNING, 1, 2)
    with pytest.raises(ValueError):
        certified_shift(EschParams((0, 0, 0), (0, 0, 0)), 1, 1)  # not free


def test_certified_shift_rejects_vanishing_differences():
    # free parameters with a_k == b_l exist (a1 == b1 here); for them the
    # candidate pair sum 2(a_k - b_l) is 0 at every shift, so at most two
    # shifts can be non-singular and there is no guaranteed-shift form
    e = EschParams((0, 2, 2), (0, 1, 3))
    assert is_free(e)
    assert 0 in [ak - bl for ak in e.a for bl in e.b]
    with pytest.raises(ValueError, match="vanishing difference"):
        certified_shift(e, 1, 1)
    with pytest.raises(ValueError, match="vanishing difference"):
        homotopy_distinct_embeddings(e, 1)
    # the only candidate shifts make |a2 + a3 + 1 + 2c| == 1, i.e. c in {-2, -3}
    good = [c for c in range(-100, 101) if nonsingular_shift(e, c)]
    assert set(good) <= {-2, -3}
    assert good  # and at least one of them works here
    # the window machinery is unaffected: vanishing differences cannot occur
    # for positively curved parameters
    assert not is_pc_metric(e)


def test_certified_shifts_always_nonsingular_sampled():
    rng = random.Random(331)
    for _ in range(300):
        e = random_free_esch(rng, -50, 50, nonzero_diffs=True)
        for mu in (1, 2, 3):
            for sign in (1, -1):
                c = certified_shift(e, mu, sign)
                assert nonsingular_shift(e, c), (e, mu, sign, c)


# ---------------------------------------------------------------------------
# sigma_3 closed form and collisions


def test_sigma3_closed_form_examples():
    assert sigma3_shift_closed_form(E_RUNNING, -1) == -4024
    assert sigma3_shift_closed_form(EschParams((1, 0, 0), (1, 0, 0)), 7) == 0
    assert sigma3_shift_closed_form(E_RUNNING, 2) == -12328
    assert abs(-12328) == 8 * 1541


def test_sigma3_closed_form_matches_direct_expansion():
    rng = random.Random(337)
    for _ in range(10_000):
        e = random_esch(rng, -30, 30)
        c = rng.randint(-50, 50)
        assert sigma3_shift_closed_form(e, c) == elementary_symmetric(3, six_tuple(e, c))


def test_collision_locus_examples():
    assert collision_locus(E_RUNNING) == Fraction(-330, 173) - 3 == Fraction(-849, 173)
    assert collision_locus(EschParams((1, 0, 0), (1, 0, 0))) is None  # everywhere
    assert collision_locus(EschParams((1, 1, 1), (3, 0, 0))) == Fraction(-11, 3)


def test_collision_locus_against_brute_force():
    rng = random.Random(347)
    for _ in range(200):
        e = random_esch(rng, -12, 12)
        locus = collision_locus(e)
        values = {c: abs(sigma3_shift_closed_form(e, c)) for c in range(-20, 21)}
        for c in range(-20, 21):
            for d in range(c + 1, 21):
                collide = values[c] == values[d]
                predicted = locus is None or Fraction(c + d) == locus
                assert collide == predicted, (e, c, d)


# ---------------------------------------------------------------------------
# curvature windows


def test_pc_shift_window_examples():
    assert pc_shift_window(EschParams((39, 0, 0), (55, -3, -13))) == range(0, 8)
    assert pc_shift_window(EschParams((309, 6, 0), (323, -3, -5))) == range(-3, 4)
    assert pc_shift_window(E_RUNNING) == range(0, 6)
    # the inequality chain alone is the precondition; min(a) need not be 0,
    # and the window is expressed in the input's own shift coordinates
    assert pc_shift_window(EschParams((3, 1, 1), (5, 0, 0))) == range(-1, 0)


def test_pc_shift_window_requires_normal_form():
    with pytest.raises(NormalFormError):
        pc_shift_window(EschParams((1, 1, 0), (2, 1, -1)))  # not positively curved
    with pytest.raises(NormalFormError):
        pc_shift_window(EschParams((1, 1, 1), (-1, 2, 2)))  # mirrored chain


def test_window_membership_is_curvature():
    rng = random.Random(349)
    for _ in range(500):
        f = pc_normal_form(random_pc_esch(rng, -25, 25))
        window = pc_shift_window(f)
        assert len(window) > 0
        for c in range(window.start - 3, window.stop + 3):
            assert is_pc_baz(candidate_q(f, c)) == (c in window), (f, c)


def test_window_scan_table_row_one():
    report = window_scan(EschParams((39, 0, 0), (55, -3, -13)))
    assert report.window == range(0, 8)
    assert not report.any_nonsingular
    assert all(not cert.baz_free for cert in report.certificates)
    assert all(cert.baz_pc for cert in report.certificates)


def test_window_scan_running_example():
    report = window_scan(E_RUNNING)
    good = {cert.shift: cert for cert in report.certificates if cert.baz_free}
    assert set(good) == {2, 5}
    assert good[2].baz.q == (9, 5, 5, -1, 17) and good[2].baz_pc and good[2].h6 == 1541
    assert good[5].baz.q == (15, 11, 11, -7, 11) and good[5].baz_pc and good[5].h6 == 2579
    assert report.any_nonsingular
    assert report.notes == ()


def test_window_scan_normalizes_and_emits_family_note():
    # a=(3,1,1), b=(5,0,0) normalizes to a=(2,0,0), b=(4,-1,-1); its single
    # window shift carries the candidate (5,1,1,1,1)
    report = window_scan(EschParams((3, 1, 1), (5, 0, 0)))
    assert report.esch == EschParams((2, 0, 0), (4, -1, -1))
    assert report.window == range(0, 1)
    (cert,) = report.certificates
    assert cert.baz.q == (5, 1, 1, 1, 1)
    assert cert.baz_free and cert.baz_pc
    assert report.notes == (COHOM1_WINDOW_NOTE,)
    assert "-1 <= c <= 0" in report.notes[0] and "{-1}" in report.notes[0]


def test_window_scan_rejects_non_pc():
    with pytest.raises(NotPositivelyCurvedError):
        window_scan(EschParams((1, 1, 0), (2, 1, -1)))


def test_window_scan_certificates_recompute():
    rng = random.Random(353)
    for _ in range(100):
        report = window_scan(random_pc_esch(rng, -20, 20))
        for cert in report.certificates:
            assert cert.baz == candidate_q(cert.esch, cert.shift)
            assert cert.baz_free == is_free_baz(cert.baz)
            assert cert.baz_pc == is_pc_baz(cert.baz)
            assert cert.h6 == (h6_order(cert.baz) if cert.baz_free else 0)
        assert report.any_nonsingular == any(c.baz_free for c in report.certificates)


# ---------------------------------------------------------------------------
# distinct embedding targets


def test_homotopy_distinct_embeddings_examples():
    certs = homotopy_distinct_embeddings(E_RUNNING, 3)
    assert len(certs) == 3
    assert all(cert.baz_free for cert in certs)
    h6s = [cert.h6 for cert in certs]
    assert len(set(h6s)) == 3

    certs = homotopy_distinct_embeddings(EschParams((1, 1, 1), (3, 0, 0)), 2)
    assert len({cert.h6 for cert in certs}) == 2

    (cert,) = homotopy_distinct_embeddings(EschParams((39, 0, 0), (55, -3, -13)), 1)
    assert cert.baz_free


def test_homotopy_distinct_embeddings_certificates_consistent():
    certs = homotopy_distinct_embeddings(E_RUNNING, 4)
    for cert in certs:
        assert cert.baz == candidate_q(cert.esch, cert.shift)
        assert nonsingular_shift(cert.esch, cert.shift)
    with pytest.raises(ValueError):
        homotopy_distinct_embeddings(EschParams((0, 0, 0), (0, 0, 0)), 1)
    with pytest.raises(ValueError):
        homotopy_distinct_embeddings(E_RUNNING, 0)


def test_homotopy_distinct_embeddings_bulk():
    rng = random.Random(359)
    for _ in range(100):
        e = random_free_esch(rng, -30, 30, nonzero_diffs=True)
        certs = homotopy_distinct_embeddings(e, 3)
        assert len({c.h6 for c in certs}) == 3
        assert all(c.baz_free for c in certs)


# ---------------------------------------------------------------------------
# duality


def test_dual_embedding_examples():
    swapped, dual = dual_embedding(E_RUNNING, -1)
    assert dual.q == (29, -5, -23, 1, 1)
    assert swapped == EschParams((14, -3, -12), (1, -1, -1))
    assert h6_order(dual) == 503

    swapped, dual = dual_embedding(EschParams((3, 1, 1), (5, 0, 0)), -1)
    assert dual.q == (9, -1, -1, -1, -1)
    assert h6_order(dual) == h6_order(candidate_q(EschParams((3, 1, 1), (5, 0, 0)), -1))


def test_dual_embedding_requires_nonsingular():
    with pytest.raises(SingularCandidateError):
        dual_embedding(E_RUNNING, 0)


def test_dual_embedding_preserves_h6_and_freeness_bulk():
    rng = random.Random(367)
    checked = 0
    while checked < 1000:
        e = random_free_esch(rng, -25, 25)
        c = rng.randint(-20, 20)
        if not nonsingular_shift(e, c):
            continue
        checked += 1
        q = candidate_q(e, c)
        swapped, dual = dual_embedding(e, c)
        assert is_free_baz(dual), (e, c)
        assert h6_order(dual) == h6_order(q)
        assert dual == candidate_q(swapped, 0)


def test_make_certificate_offending_pairs():
    cert = make_certificate(E_RUNNING, 0)
    assert not cert.baz_free
    assert ((1, 2), (4, 5), 6) in cert.offending_pairs
    assert cert.h6 == 0
    assert cert.esch_pc
