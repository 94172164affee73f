import pytest

from neumaier import arith
from neumaier.charsums import count_direct
from neumaier.primesearch import (RING_EISENSTEIN, RING_GAUSSIAN,
                                  QuadraticRingElt, admissible,
                                  assemble_from_eisenstein,
                                  assemble_from_gaussian,
                                  canonical_subgroup_rep, conic_conditions,
                                  conic_solve, find_a, scan_quadratic_primes,
                                  search_triples, sixth_root_beta)


def test_admissible_examples():
    cert = admissible(13, 5)
    assert cert is not None and cert.r == 2
    assert cert.factor_data == ((5, 1, 2),)
    assert admissible(7, 5) is not None       # r = 1 divides 4
    assert admissible(13, 7) is None          # 4 does not divide 6
    with pytest.raises(ValueError, match="odd prime"):
        admissible(15, 7)


def test_find_a_examples():
    assert 2 in find_a(13, 5)
    assert find_a(397, 13) == [5, 6, 7, 18, 20, 28]
    assert find_a(7, 3) == [5]  # canonical generator of the subgroup of 17 mod 21
    assert 5 in {pow(17, i, 21) for i in range(6)}
    assert find_a(13, 7) == []  # not admissible


def test_find_a_beta_choice_filter():
    full = find_a(13, 5)
    only2 = find_a(13, 5, beta_choice=2)
    assert set(only2) <= set(full) and len(only2) == 1


def test_canonicalization_is_idempotent_and_subgroup_invariant():
    for p, q, a in ((13, 5, 2), (139, 7, 836), (397, 13, 6)):
        canon = canonical_subgroup_rep(p, q, a)
        assert canonical_subgroup_rep(p, q, canon) == canon
        # powers with exponent coprime to the order give the same subgroup
        n = p * q
        for i in (3, 5, 7):
            if arith.multiplicative_order(a, n) % i:
                assert canonical_subgroup_rep(p, q, pow(a, i, n)) == canon
    assert canonical_subgroup_rep(139, 7, 836) == 26


def test_search_q5_up_to_200():
    rows = search_triples(5, 200).rows
    assert [(r.p, r.a, r.lam, r.t) for r in rows] == [
        (13, 2, 3, 1), (37, 2, 3, 1), (61, 17, 18, 4),
        (149, 13, 18, 4), (149, 2, 33, 7), (197, 3, 48, 10)]
    for r in rows:
        assert r.params.v == r.t * r.p * r.q
        assert r.params.k == r.p + r.lam
        assert r.params.s == r.lam + 2


def test_search_multiple_of_three_is_empty_with_note():
    result = search_triples(3, 300)
    assert result.rows == []
    assert "multiple of 3" in result.note
    result = search_triples(9, 200)
    assert result.rows == []


def test_search_q25_low_range():
    rows = search_triples(25, 1100).rows
    assert [(r.p, r.a, r.t) for r in rows] == [(1021, 77, 2), (1021, 122, 2)]


def test_search_parallel_matches_serial():
    serial = search_triples(7, 400).rows
    parallel = search_triples(7, 400, jobs=2).rows
    assert serial == parallel


def test_gaussian_scan_finds_the_known_prime():
    hits = scan_quadratic_primes(RING_GAUSSIAN, (5, 6), 20, 500)
    assert [(h[0].c, h[0].d, h[1]) for h in hits] == [(5, 6, 61), (-15, -14, 421)]
    norms = [h[1] for h in hits]
    assert norms == sorted(norms)


def test_eisenstein_scan_finds_the_known_prime():
    hits = scan_quadratic_primes(RING_EISENSTEIN, (3, 10), 84, 200)
    assert (hits[0][0].c, hits[0][0].d, hits[0][1]) == (3, 10, 139)


def test_scan_rejects_noncoprime_class():
    with pytest.raises(ValueError, match="coprime"):
        scan_quadratic_primes(RING_GAUSSIAN, (2, 2), 20, 100)


def test_scan_degenerate_small_modulus():
    hits = scan_quadratic_primes(RING_GAUSSIAN, (1, 0), 2, 50)
    assert all(p % 4 == 1 or p == 2 for _, p in hits)
    assert all((elt.c - 1) % 2 == 0 and elt.d % 2 == 0 for elt, _ in hits)


def test_assemble_from_gaussian_worked_example():
    asm = assemble_from_gaussian((-15, -14))
    assert (asm.p, asm.alpha, asm.beta) == (421, 2, 2)
    assert asm.a == 2
    assert asm.predicted_count == 63 == count_direct(421, 5, 2)


def test_assemble_from_gaussian_bad_class():
    with pytest.raises(ValueError, match="mod 4"):
        assemble_from_gaussian((3, 2))


def test_assemble_hits_give_count_minus2_mod_5():
    for elt, p in scan_quadratic_primes(RING_GAUSSIAN, (5, 6), 20, 2500):
        asm = assemble_from_gaussian(elt)
        assert asm.predicted_count % 5 == 3
        assert asm.predicted_count == count_direct(asm.p, 5, asm.a)
        if p >= 41:
            assert (asm.predicted_count + 2) // 5 >= 2  # strictly Neumaier range


def test_assemble_from_eisenstein_worked_example_q7():
    asm = assemble_from_eisenstein((3, 10), 7)
    assert (asm.p, asm.alpha, asm.beta) == (139, 2, 3)
    assert asm.a == 836
    assert asm.predicted_count == 26 == count_direct(139, 7, 836)


def test_assemble_from_eisenstein_worked_example_q247():
    asm = assemble_from_eisenstein((-247, 1002), 247)
    assert (asm.p, asm.alpha, asm.beta) == (817519, 15, 69)
    assert asm.a == 22890547
    assert asm.predicted_count == 45446
    assert asm.predicted_count % 247 == 245


def test_sixth_root_beta():
    assert sixth_root_beta(247) == 69
    assert sixth_root_beta(7) == 3
    assert sixth_root_beta(49) in {x for x in range(49) if (x * x - x + 1) % 49 == 0}
    for q in (13, 19, 91, 133):
        b = sixth_root_beta(q)
        assert (b * b - b + 1) % q == 0


def test_conic_solver_examples():
    sol = conic_solve(247)
    assert conic_conditions(247, sol.z1, sol.z2) == []
    # the published solution satisfies the same conditions
    assert conic_conditions(247, 2717, 1002) == []
    for q in (7, 13, 19, 49, 343, 637):
        sol = conic_solve(q)
        assert conic_conditions(q, sol.z1, sol.z2) == []


def test_conic_versus_published_prime_field_points():
    # over F_13 the conic passes through (0, 1); over F_19 through (0, 14)
    conic = lambda z1, z2: z1 * z1 + z1 * z2 + z2 * z2 + 2 * z1 + z2 + 37
    assert conic(0, 1) % 13 == 0 and (2 * 0 + 1 + 37) % 13 != 0
    assert conic(0, 14) % 19 == 0 and (2 * 0 + 14 + 37) % 19 != 0


def test_conic_rejects_bad_factor():
    with pytest.raises(ValueError, match="not 1 mod 6"):
        conic_solve(5)
    with pytest.raises(ValueError, match="not 1 mod 6"):
        conic_solve(35)
