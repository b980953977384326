import pytest

from conftest import WORKED_CLASSICAL, load_poly, worked_ideal
from idealtutte.errors import ConstraintError, GuardExceeded
from idealtutte.exactpoly import UnivariatePolynomial, coboundary_to_tutte
from idealtutte.ffmethod import (
    CountingModel,
    arrangement_rank,
    coboundary_full,
    coboundary_full_at_prime,
    coboundary_ideal_at_prime,
    coboundary_polynomial,
    count_points_bruteforce,
    full_arrangement_tuples,
    minor_set,
    prime_plan,
    tutte_via_ffmethod,
)
from idealtutte.ideals import complement, ideal_from_mask, partition_in_accordance
from idealtutte.rootsystems import positive_roots, root_poset, root_system_type


def true_coordinates(family, rank):
    """Positive roots in plain standard coordinates (ambient2 halved)."""
    out = []
    for r in positive_roots(root_system_type(family, rank)):
        assert all(c % 2 == 0 for c in r.ambient2)
        out.append(tuple(c // 2 for c in r.ambient2))
    return out


# ---- minor sets ---------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_minor_set_type_a(n):
    profile = minor_set(true_coordinates("A", n - 1))
    # n = 2 is a single row, so the singular minor 0 only appears from n = 3 on
    want = {1, -1} if n == 2 else {0, 1, -1}
    assert set(profile.minors) == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minor_set_type_b(n):
    profile = minor_set(true_coordinates("B", n))
    want = {0} | {s * 2 ** k for k in range(n // 2 + 1) for s in (1, -1)}
    assert set(profile.minors) == want


def test_minor_set_single_row():
    assert minor_set([(2, 0, 0)]).magnitudes() == [0, 2]


def test_minor_set_guard():
    with pytest.raises(GuardExceeded):
        minor_set([(1,) * 30] * 40, max_order=20, max_minors=1000)


# ---- prime plans ---------------------------------------------------------------


def test_prime_plans():
    assert prime_plan("A", 2).primes == (3, 5, 7)
    assert prime_plan("B", 6).primes == (3, 5, 7, 11, 13, 17, 19)
    assert prime_plan("D", 4).primes == (3, 5, 7, 11, 13)
    assert all(p % 2 for p in prime_plan("C", 9).primes)


# ---- brute-force point counts ---------------------------------------------------


def test_profile_a2_braid():
    tp = count_points_bruteforce([(1, 2), (1, 3), (2, 3)], 3, 3)
    assert tp.counts == (6, 18, 0, 3)
    assert tp.coboundary() == UnivariatePolynomial([2, 6, 0, 1])


def test_profile_single_hyperplane():
    tp = count_points_bruteforce([(1, 0)], 1, 3)
    assert tp.counts == (2, 1)
    assert tp.coboundary() == UnivariatePolynomial([2, 1])


def test_profile_empty_arrangement():
    tp = count_points_bruteforce([], 2, 3)
    assert tp.counts == (9,)
    assert tp.total() == 9


def test_profile_guard():
    with pytest.raises(GuardExceeded):
        count_points_bruteforce([(1, 2)], 12, 11, max_points=10 ** 6)


# ---- closed forms at primes ------------------------------------------------------


def test_full_formula_examples():
    assert coboundary_full_at_prime("A", 2, 3) == UnivariatePolynomial([2, 1])
    assert coboundary_full_at_prime("A", 3, 3) == UnivariatePolynomial([2, 6, 0, 1])


@pytest.mark.parametrize("family,n,p", [
    ("A", 3, 5), ("A", 4, 3), ("B", 2, 3), ("B", 3, 5), ("D", 4, 3), ("C", 3, 3),
])
def test_full_formula_matches_brute_force(family, n, p):
    got = coboundary_full_at_prime(family, n, p)
    tuples = full_arrangement_tuples(family, n)
    assert got == count_points_bruteforce(tuples, n, p).coboundary()


def test_ideal_closed_form_examples():
    # a single A-block of size 2 is one hyperplane: chi-bar(3, t) = t + 2
    poset = root_poset(root_system_type("A", 1))
    ideal = ideal_from_mask(poset, 0)
    bp = partition_in_accordance(complement(ideal))
    prof = coboundary_ideal_at_prime(bp, 3)
    assert prof == UnivariatePolynomial([2, 1])


def test_ideal_closed_form_equals_brute_force_on_worked_examples():
    for label in WORKED_CLASSICAL:
        ideal = worked_ideal(label)
        comp = complement(ideal)
        bp = partition_in_accordance(comp)
        n = ideal.rst.ambient_dim
        for p in (3, 5):
            prof = coboundary_ideal_at_prime(bp, p)
            assert prof == count_points_bruteforce(comp.hyperplanes, n, p).coboundary(), (
                label,
                p,
            )


def test_counting_model_requires_odd_prime():
    model = CountingModel(2, [(1, 2)])
    with pytest.raises(ConstraintError):
        model.point_count_profile(2)


def test_counting_model_automorphism_blocks():
    # the braid on 3 coordinates has a single exchangeable block
    model = CountingModel(3, [(1, 2), (1, 3), (2, 3)])
    assert model.blocks == [[1, 2, 3]]
    # one isolated coordinate splits off
    model = CountingModel(3, [(1, 2)])
    assert model.blocks == [[1, 2], [3]]


# ---- the full pipeline ------------------------------------------------------------


@pytest.mark.parametrize("label", ["a", "b", "c"])
def test_pipeline_matches_published_polynomials(label):
    ideal = worked_ideal(label)
    assert coboundary_polynomial(ideal) == load_poly(
        f"coboundary_i{label}.txt", ("q", "t")
    )
    assert tutte_via_ffmethod(ideal) == load_poly(f"tutte_i{label}.txt", ("x", "y"))


def test_pipeline_full_ideal_is_one():
    poset = root_poset(root_system_type("B", 3))
    full_ideal = ideal_from_mask(poset, (1 << len(poset)) - 1)
    assert coboundary_polynomial(full_ideal) == 1


def test_pipeline_empty_ideal_braid_a3():
    # chi-bar of the braid arrangement; its Tutte transform has T(1,1) = 16
    poset = root_poset(root_system_type("A", 3))
    empty = ideal_from_mask(poset, 0)
    cb = coboundary_polynomial(empty)
    t = coboundary_to_tutte(cb, 3)
    assert t.evaluate(1, 1) == 16
    assert cb == coboundary_full("A", 4)


def test_pipeline_rejects_exceptional():
    poset = root_poset(root_system_type("G2"))
    with pytest.raises(Exception):
        coboundary_polynomial(ideal_from_mask(poset, 0))


def test_pipeline_with_prime_override():
    ideal = worked_ideal("d")
    default = coboundary_polynomial(ideal)
    shifted = coboundary_polynomial(ideal, primes=[5, 7, 11, 13, 17, 19, 23])
    assert default == shifted
    with pytest.raises(ConstraintError):
        coboundary_polynomial(ideal, primes=[3, 5])


def test_theorem_identity_profile_vs_closed_form_sweep():
    # p^(n-rank) * chi-bar(p, .) equals the brute-force profile for every
    # ideal of B3 and D4 at the first plan primes
    from idealtutte.ideals import enumerate_ideals

    for family, rank in (("B", 3), ("D", 4)):
        poset = root_poset(root_system_type(family, rank))
        n = poset.rst.ambient_dim
        for ideal in enumerate_ideals(poset):
            comp = complement(ideal)
            if not comp.roots:
                continue
            model = CountingModel(n, comp.hyperplanes)
            for p in (3, 5):
                assert model.point_count_profile(p) == list(
                    count_points_bruteforce(comp.hyperplanes, n, p).counts
                ), (family, ideal, p)


def test_chi_bar_at_one_is_q_rank():
    for label in WORKED_CLASSICAL:
        ideal = worked_ideal(label)
        cb = coboundary_polynomial(ideal)
        r = arrangement_rank(ideal)
        for q in (7, 97):
            assert cb.evaluate(q, 1) == q ** r


def test_q_degree_bounded_by_rank():
    for label in WORKED_CLASSICAL:
        ideal = worked_ideal(label)
        cb = coboundary_polynomial(ideal)
        assert cb.degree(0) <= arrangement_rank(ideal)
