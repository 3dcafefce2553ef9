from collections import Counter
from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from singular_bgg.weights import (
    InvalidOrbitElementError,
    InvalidRankError,
    NoRegularConjugateError,
    OrbitElement,
    SingularityTooDeepError,
    Weight,
    analyze_singularity,
    compute_orbit,
    delete_pairs,
    grassmannian_length,
    insert_pairs,
    rho,
)
from conftest import rho_like_family

MU_EX2 = Weight((5, 5, 4, 3, 2, 2, 1, 0))


def brute_orbit(mu, k):
    """Every permutation of mu cut at k, kept when both halves strictly descend."""
    out = set()
    for perm in set(permutations(mu.dominant().coords)):
        a, b = perm[:k], perm[k:]
        if all(x > y for x, y in zip(a, a[1:])) and all(x > y for x, y in zip(b, b[1:])):
            out.add(OrbitElement(a, b))
    return out


@pytest.mark.parametrize("n, expected", [
    (5, (4, 3, 2, 1, 0)),
    (2, (1, 0)),
    (8, (7, 6, 5, 4, 3, 2, 1, 0)),
])
def test_rho(n, expected):
    assert rho(n).coords == expected


def test_rho_rejects_small_rank():
    with pytest.raises(InvalidRankError):
        rho(1)


def test_analyze_example2():
    prof = analyze_singularity(MU_EX2, 4)
    assert (prof.l, prof.S, prof.I, prof.J) == (2, (1, 5), (5, 2), (4, 3, 1, 0))


def test_analyze_regular():
    prof = analyze_singularity(Weight((4, 3, 2, 1, 0)), 2)
    assert (prof.l, prof.S, prof.I, prof.J) == (0, (), (), (4, 3, 2, 1, 0))


def test_analyze_too_deep():
    with pytest.raises(SingularityTooDeepError):
        analyze_singularity(Weight((3, 3, 3, 1)), 2)


def test_analyze_l_exceeds_k():
    with pytest.raises(NoRegularConjugateError):
        analyze_singularity(Weight((3, 3, 2, 2, 1, 1, 0, 0)), 2)


def test_analyze_sorts_nondominant(caplog):
    with caplog.at_level("INFO"):
        prof = analyze_singularity(Weight((2, 5, 0, 5, 1, 3, 2, 4)), 4)
    assert prof.mu == MU_EX2
    assert "not dominant" in caplog.text


def test_singularity_positions_spaced():
    for mu, k in rho_like_family(10):
        S = analyze_singularity(mu, k).S
        assert all(t >= s + 2 for s, t in zip(S, S[1:]))


def test_orbit_example1():
    orbit = compute_orbit(Weight((4, 3, 2, 1, 0)), 2)
    assert {str(e) for e in orbit} == {
        "(43|210)", "(42|310)", "(41|320)", "(40|321)", "(32|410)",
        "(31|420)", "(30|421)", "(21|430)", "(20|431)", "(10|432)",
    }


def test_orbit_example2():
    orbit = compute_orbit(MU_EX2, 4)
    assert len(orbit) == 6 == comb(4, 2)
    assert OrbitElement((5, 4, 3, 2), (5, 2, 1, 0)) in orbit


def test_orbit_forced_split():
    # (1,1) normalizes to (0,0)
    assert compute_orbit(Weight((1, 1)), 1) == [OrbitElement((0,), (0,))]


@pytest.mark.parametrize("mu, k", [(mu, k) for mu, k in rho_like_family(7)])
def test_orbit_matches_brute_force(mu, k):
    prof = analyze_singularity(mu, k)
    orbit = compute_orbit(mu, k)
    assert set(orbit) == brute_orbit(mu, k)
    assert len(orbit) == comb(prof.n - 2 * prof.l, k - prof.l)


def test_delete_pairs_examples():
    prof = analyze_singularity(MU_EX2, 4)
    assert delete_pairs(OrbitElement((5, 4, 3, 2), (5, 2, 1, 0)), prof) == OrbitElement((4, 3), (1, 0))
    assert delete_pairs(OrbitElement((5, 2, 1, 0), (5, 4, 3, 2)), prof) == OrbitElement((1, 0), (4, 3))


def test_delete_pairs_regular_is_identity():
    prof = analyze_singularity(Weight((4, 3, 2, 1, 0)), 2)
    nu = OrbitElement((4, 1), (3, 2, 0))
    assert delete_pairs(nu, prof) == nu
    assert insert_pairs(nu, prof) == nu


def test_delete_pairs_rejects_outsider():
    prof = analyze_singularity(MU_EX2, 4)
    with pytest.raises(InvalidOrbitElementError):
        delete_pairs(OrbitElement((5, 4, 3, 2), (5, 3, 1, 0)), prof)


def test_insert_pairs_example():
    prof = analyze_singularity(MU_EX2, 4)
    assert insert_pairs(OrbitElement((4, 3), (1, 0)), prof) == OrbitElement((5, 4, 3, 2), (5, 2, 1, 0))


def test_orbit_bijection_exhaustive():
    for mu, k in rho_like_family(12):
        prof = analyze_singularity(mu, k)
        orbit = compute_orbit(mu, k)
        primes = [delete_pairs(nu, prof) for nu in orbit]
        assert len(set(primes)) == len(orbit)
        assert all(insert_pairs(p, prof) == nu for p, nu in zip(primes, orbit))
        # image is exactly Orb' for G(k-l, n-2l)
        expected = {
            OrbitElement.from_groups(c, [x for x in prof.J if x not in c])
            for c in combinations(prof.J, k - prof.l)
        }
        assert set(primes) == expected


@pytest.mark.parametrize("nu, length", [
    (OrbitElement((4, 3), (2, 1, 0)), 0),
    (OrbitElement((4, 2), (3, 1, 0)), 1),
    (OrbitElement((1, 0), (4, 3, 2)), 6),
])
def test_grassmannian_length(nu, length):
    assert grassmannian_length(nu) == length


def test_length_range_over_orbit_prime():
    for mu, k in rho_like_family(9):
        prof = analyze_singularity(mu, k)
        lengths = [grassmannian_length(delete_pairs(nu, prof)) for nu in compute_orbit(mu, k)]
        assert min(lengths) == 0
        assert max(lengths) == (k - prof.l) * (prof.n - k - prof.l)


@st.composite
def singular_weights(draw):
    n = draw(st.integers(2, 9))
    l = draw(st.integers(0, n // 2))
    vals = draw(st.lists(st.integers(-20, 20), min_size=n - l, max_size=n - l, unique=True))
    doubled = draw(st.lists(st.sampled_from(vals), min_size=l, max_size=l, unique=True)) if l else []
    coords = vals + doubled
    coords = draw(st.permutations(coords))
    k = draw(st.integers(max(l, 1), n // 2))
    return Weight(tuple(coords)), k


@given(singular_weights())
def test_normalization_idempotent(case):
    mu, _ = case
    once = mu.dominant()
    assert once.dominant() == once
    assert once.coords[-1] == 0


@given(singular_weights(), st.integers(-50, 50))
def test_shift_invariance(case, c):
    mu, k = case
    shifted = Weight(tuple(x + c for x in mu.coords))
    assert analyze_singularity(mu, k) == analyze_singularity(shifted, k)
    assert compute_orbit(mu, k) == compute_orbit(shifted, k)


@given(singular_weights())
def test_orbit_multiset_and_descent(case):
    mu, k = case
    mu_counts = Counter(mu.dominant().coords)
    for nu in compute_orbit(mu, k):
        assert Counter(nu.coords()) == mu_counts
        assert len(nu.first) == k
