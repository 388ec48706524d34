import random

import pytest

import oracles
from syzygy.betti import (BettiTable, betti_gpw, betti_hochster, betti_hochster_dual, check_subadditivity_at_top,
                          max_degrees)
from syzygy.combinatorics import induced
from syzygy.errors import CapExceededError
from syzygy.homology import PrimeField, reduced_euler_characteristic
from syzygy.monomial import Monomial, MonomialIdeal, stanley_reisner_complex
from syzygy.sampling import random_squarefree_ideal

GF2 = PrimeField(2)


def as_sets(B: BettiTable):
    return {(i, frozenset(m.support)): r for (i, m), r in B.multigraded.items()}


# -- the three worked tables -----------------------------------------------------------------

def test_run_example_table(run_ideal):
    B = betti_hochster(run_ideal)
    assert B.totals() == [1, 7, 11, 6, 1]
    assert B.grid() == [[1, 0, 0, 0, 0], [0, 6, 9, 5, 1], [0, 1, 2, 1, 0]]
    assert B.get(3, Monomial.from_face(range(5))) == 1
    assert B.coarse()[3, 4] == 5 and B.coarse()[3, 5] == 1


def test_xy_example_table(xy_ideal):
    B = betti_hochster(xy_ideal)
    assert B.totals() == [1, 3, 3, 1]
    assert B.coarse() == {(1, 2): 3, (2, 4): 3, (3, 6): 1}
    assert betti_gpw(xy_ideal).get(3, Monomial.from_face(range(6))) == 1


def test_degree_three_example_table(degree3_ideal):
    B = betti_hochster(degree3_ideal)
    assert B.totals() == [1, 5, 5, 1]
    assert B.grid()[2] == [0, 5, 5, 1]


def test_principal_ideal():
    I = MonomialIdeal.parse("abcd", "abcd")
    for route in (betti_hochster, betti_hochster_dual, betti_gpw):
        B = route(I)
        assert B.multigraded == {(1, Monomial.from_face(range(4))): 1}
    assert max_degrees(betti_hochster(I)) == {1: 4}


def test_max_degrees_examples(run_ideal, degree3_ideal):
    assert max_degrees(betti_hochster(run_ideal)) == {1: 3, 2: 4, 3: 5, 4: 5}
    assert max_degrees(betti_hochster(degree3_ideal)) == {1: 3, 2: 4, 3: 5}


# -- input checks ------------------------------------------------------------------------------

def test_zero_and_non_squarefree_inputs():
    with pytest.raises(ValueError, match="zero ideal"):
        betti_hochster(MonomialIdeal.parse([], "ab"))
    with pytest.raises(ValueError, match="polarize"):
        betti_hochster(MonomialIdeal.parse("a^2", "ab"))


def test_variable_cap(monkeypatch):
    monkeypatch.setenv("SYZYGY_MAX_N", "3")
    with pytest.raises(CapExceededError):
        betti_hochster(MonomialIdeal.parse("ab cd", "abcd"))


# -- agreement with the from-scratch oracle ---------------------------------------------------

@pytest.mark.parametrize("p", [0, 2])
def test_routes_match_bruteforce(p):
    k = PrimeField(p) if p else None
    rng = random.Random(40 + p)
    for _ in range(30):
        n = rng.randint(1, 6)
        I = random_squarefree_ideal(rng, n, rng.randint(1, 5))
        expected = oracles.betti_numbers([g.support for g in I.generators], n, p)
        kwargs = {"k": k} if k else {}
        assert as_sets(betti_hochster(I, **kwargs)) == expected
        assert as_sets(betti_hochster_dual(I, **kwargs)) == expected
        assert as_sets(betti_gpw(I, **kwargs)) == expected


def test_betti_numbers_vanish_off_the_lattice():
    rng = random.Random(3)
    for _ in range(30):
        I = random_squarefree_ideal(rng, rng.randint(2, 7), rng.randint(1, 6))
        assert betti_hochster(I, full_sweep=True).multigraded == betti_hochster(I).multigraded
        assert betti_hochster_dual(I, full_sweep=True).multigraded == betti_hochster(I).multigraded


def test_thread_count_does_not_change_output(run_ideal):
    one = betti_hochster(run_ideal, threads=1)
    many = betti_hochster(run_ideal, threads=4)
    assert one == many and list(one.multigraded) == list(many.multigraded)


def test_alternating_sums_match_euler_characteristics():
    """Σ_i (-1)^i β_{i,j} = Σ_{|u|=j} (-1)^{j-1} χ̃(Γ_u) for j >= 1."""
    rng = random.Random(17)
    for _ in range(25):
        n = rng.randint(2, 7)
        I = random_squarefree_ideal(rng, n, rng.randint(1, 5))
        gamma = stanley_reisner_complex(I)
        coarse = betti_hochster(I).coarse()
        for j in range(1, n + 1):
            lhs = sum((-1) ** i * r for (i, jj), r in coarse.items() if jj == j)
            rhs = 0
            for u in oracles.powerset(range(n)):
                if len(u) == j:
                    rhs += (-1) ** (j - 1) * reduced_euler_characteristic(induced(gamma, u))
            assert lhs == rhs


def test_syzygy_degrees_grow():
    rng = random.Random(23)
    for _ in range(40):
        I = random_squarefree_ideal(rng, rng.randint(2, 7), rng.randint(1, 6))
        for a, t in max_degrees(betti_hochster(I)).items():
            assert t >= a


def test_top_degree_vanishing():
    """β_{j,n} = 0 for j > n - d + 1."""
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 7)
        I = random_squarefree_ideal(rng, n, rng.randint(1, 6), min_deg=2)
        B = betti_hochster(I)
        d = I.min_degree
        for (i, j), r in B.coarse().items():
            if j == n and r:
                assert i <= n - d + 1


def test_same_numbers_ignores_field(run_ideal):
    assert betti_hochster(run_ideal).same_numbers(betti_hochster(run_ideal, GF2))
    assert betti_hochster(run_ideal) != betti_hochster(run_ideal, GF2)


# -- subadditivity at the top degree ----------------------------------------------------------

def test_subadditivity_degree_three(degree3_ideal):
    r = check_subadditivity_at_top(degree3_ideal)
    assert (r.n, r.d, r.i) == (5, 3, 3) and r.hypothesis_met and r.passed
    assert "t_3=5 ≤ t_1+t_2=7 PASS" in r.lines()


def test_subadditivity_run_example(run_ideal):
    r = check_subadditivity_at_top(run_ideal)
    assert r.i == 4 and r.passed
    assert [(s.a, s.b, s.t_a + s.t_b, s.t_i) for s in r.splits] == [(1, 3, 8, 5), (2, 2, 8, 5)]


def test_subadditivity_vacuous_and_unmet():
    r = check_subadditivity_at_top(MonomialIdeal.parse("ab", "ab"))
    assert r.i == 1 and r.hypothesis_met and r.splits == () and r.passed
    unmet = check_subadditivity_at_top(MonomialIdeal.parse("ab", "abc"))
    assert not unmet.hypothesis_met
    assert unmet.lines()[-1] == "β_{2,3}=0: theorem hypothesis not met"


def test_subadditivity_polarizes_first():
    r = check_subadditivity_at_top(MonomialIdeal.parse("x^2 xy", "xy"))
    assert r.n == 3 and r.ideal.is_squarefree
