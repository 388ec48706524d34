import random

import pytest

from suites import squarefree_ideals, top_homology_complexes
from syzygy.betti import betti_hochster, max_degrees
from syzygy.breaker import (BreakCertificateLink, break_disconnected, break_graph_cycle, break_induced,
                            break_on_links, descend, facet_intersection_check, facet_intersections,
                            graph_cycle_order, induced_certificate, link_certificate, permutation_sign,
                            search_induced_certificates, search_link_certificates, search_question_complements,
                            verify_certificate_induced, verify_certificate_link)
from syzygy.combinatorics import SimplicialComplex, alexander_dual, link, membership
from syzygy.errors import HypothesisError
from syzygy.homology import (Chain, boundary, find_nonbounding_cycle, is_boundary, is_cycle,
                             reduced_homology_dim, support_complex)
from syzygy.monomial import MonomialIdeal, stanley_reisner_complex


def cycle_graph(n):
    names = [f"x{i + 1}" for i in range(n)]
    return SimplicialComplex.from_names([(names[i], names[(i + 1) % n]) for i in range(n)], names)


def named(K, face):
    return "".join(K.names(face))


# -- link descent ------------------------------------------------------------------------

def test_permutation_sign():
    assert permutation_sign((0, 1, 2), (0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2), (0, 1, 2)) == -1
    assert permutation_sign((2, 0, 1), (0, 1, 2)) == 1


def test_descend_into_vertex_link(gamma4):
    sigma = Chain.from_names(gamma4, {"cd": 1, "de": 1, "ce": -1})
    out = descend(gamma4, sigma, gamma4.face("c"))
    assert str(out.link) == "⟨d,e⟩"
    assert str(out.sigma_A) == "[d]-[e]"
    assert out.s == 2 and not is_boundary(out.sigma_A)
    assert reduced_homology_dim(out.link, 0) == 1


def test_descend_zero_cycle_to_empty_face(gamma4):
    sigma = Chain.from_names(gamma4, {"a": 1, "c": -1})
    out = descend(gamma4, sigma, gamma4.face("a"))
    assert str(out.link) == "⟨b⟩"
    assert out.sigma_A.dim == -1 and out.sigma_A.terms == {(): 1}
    # the empty-face chain bounds in ⟨b⟩ (∂[b] = [∅]): Σ is not top-dimensional here
    assert is_boundary(out.sigma_A)
    assert reduced_homology_dim(out.link, -1) == 0


def test_descend_empty_face_is_identity(gamma4):
    sigma = Chain.from_names(gamma4, {"cd": 1, "de": 1, "ce": -1})
    assert descend(gamma4, sigma, ()).sigma_A == sigma


def test_descend_rejects_bad_input(gamma4):
    sigma = Chain.from_names(gamma4, {"cd": 1, "de": 1, "ce": -1})
    with pytest.raises(ValueError):
        descend(gamma4, sigma, gamma4.face("a"))
    with pytest.raises(ValueError):
        descend(gamma4, Chain.from_names(gamma4, {"cd": 1}), gamma4.face("c"))


def test_descend_full_facet_gives_minus_one_cycle(gamma4):
    sigma = Chain.from_names(gamma4, {"cd": 1, "de": 1, "ce": -1})
    out = descend(gamma4, sigma, gamma4.face("cd"))
    assert out.link.is_irrelevant and out.sigma_A.dim == -1
    assert not is_boundary(out.sigma_A)


def test_descend_matches_vertex_by_vertex_induction():
    """Descending one vertex at a time, smallest first, reproduces the closed-form signs."""
    for gamma in top_homology_complexes(71, 25):
        d = gamma.dim
        sigma = find_nonbounding_cycle(gamma, d)
        for A in sorted(support_complex(sigma).faces):
            direct = descend(gamma, sigma, A).sigma_A
            K, current = gamma, sigma
            for v in A:
                current = descend(K, current, (v,)).sigma_A
                K = current.complex
            assert K == link(gamma, A)
            assert current == direct


def test_facet_intersection_example(run_dual):
    sigma = find_nonbounding_cycle(run_dual, 2)
    assert facet_intersection_check(run_dual, sigma, run_dual.face("a")) == run_dual.face("a")
    F = sigma.support[0]
    assert facet_intersection_check(run_dual, sigma, F) == F


def test_facet_intersection_requires_top_cycle(gamma4):
    with pytest.raises(ValueError):
        facet_intersection_check(gamma4, Chain.from_names(gamma4, {"a": 1, "c": -1}), gamma4.face("a"))


def test_link_descent_properties_on_random_complexes():
    for gamma in top_homology_complexes(5, 30):
        d = gamma.dim
        sigma = find_nonbounding_cycle(gamma, d)
        support = sigma.support
        for A in sorted(support_complex(sigma).faces):
            out = descend(gamma, sigma, A)
            assert is_cycle(out.sigma_A) and not is_boundary(out.sigma_A)
            assert reduced_homology_dim(out.link, d - len(A)) >= 1
            assert set(out.sigma_A.terms) <= {tuple(v for v in F if v not in A) for F in support if set(A) <= set(F)}
            assert facet_intersection_check(gamma, sigma, A) == A
            containing = [set(F) for F in support if set(A) <= set(F)]
            assert set.intersection(*containing) == set(A)


# -- link certificates ---------------------------------------------------------------------

@pytest.mark.parametrize("F, G, a, b", [("ab", "de", 1, 2), ("bcd", "a", 1, 3), ("bd", "ac", 2, 2)])
def test_run_example_link_certificates(run_dual, F, G, a, b):
    cert = link_certificate(run_dual, a, b, F, G)
    assert verify_certificate_link(run_dual, cert)


def test_tampered_certificate_fails(run_dual):
    good = link_certificate(run_dual, 1, 2, "ab", "de")
    bad = BreakCertificateLink(run_dual, 1, 2, good.F, run_dual.face("abc"), good.A, good.B, good.witnesses)
    assert not verify_certificate_link(run_dual, bad)
    swapped = BreakCertificateLink(run_dual, 1, 2, good.F, good.G, good.B, good.A, good.witnesses)
    assert not verify_certificate_link(run_dual, swapped)


def test_break_on_links_run_example(run_dual):
    c13 = break_on_links(run_dual, 1, 3)
    assert (named(run_dual, c13.F), named(run_dual, c13.G)) == ("bcd", "a")
    c31 = break_on_links(run_dual, 3, 1)
    assert named(run_dual, c31.F) == "a"
    c22 = break_on_links(run_dual, 2, 2)
    assert len(c22.F) == 2 and len(c22.G) == 2
    assert c22.sigma_F.dim == 0 and c22.sigma_G.dim == 0
    assert verify_certificate_link(run_dual, c22)


def test_break_on_links_two_edges():
    K = SimplicialComplex.from_names(["uv", "xy"], "uvxy")
    cert = break_on_links(K, 1, 1)
    assert (named(K, cert.F), named(K, cert.G)) == ("uv", "xy")


def test_break_on_links_hypotheses(run_dual):
    with pytest.raises(HypothesisError, match="degree mismatch"):
        break_on_links(run_dual, 1, 2)
    with pytest.raises(HypothesisError, match="homology vanishing"):
        break_on_links(SimplicialComplex.simplex("abc"), 2, 2)


def test_break_on_links_random_suite_with_size_conditions():
    for delta in top_homology_complexes(13, 40):
        d = delta.dim
        for a in range(1, d + 2):
            b = d + 2 - a
            cert = break_on_links(delta, a, b)
            assert verify_certificate_link(delta, cert)
            if a >= 2 and b >= 2:
                assert len(cert.F) == b and len(cert.G) == a
                assert cert.sigma_F.dim == a - 2 and cert.sigma_G.dim == b - 2
                for s in (cert.sigma_F, cert.sigma_G):
                    assert boundary(s).is_zero() and not is_boundary(s)


# -- induced certificates ---------------------------------------------------------------------

def test_break_induced_pentagon(pentagon):
    cert = break_induced(pentagon, 1, 2)
    assert pentagon.names(cert.C) == ("x1", "x3")
    assert pentagon.names(cert.D) == ("x2", "x4", "x5")


def test_break_induced_disconnected(disconnected):
    cert = break_induced(disconnected, 1, 3)
    assert named(disconnected, cert.C) == "ux" and named(disconnected, cert.D) == "uvyz"


def test_break_induced_xy_example(xy_ideal):
    gamma = stanley_reisner_complex(xy_ideal)
    cert = break_induced(gamma, 1, 2)
    assert verify_certificate_induced(gamma, cert)
    # the hand-picked pair also passes the verifier
    assert verify_certificate_induced(gamma, induced_certificate(gamma, 1, 2, "xy", "abcd"))


def test_break_induced_dual_route(gamma4, run_dual):
    # Γ = run-example dual: smallest nonface has size 3, H̃_1(Γ) != 0, n - d + 1 = 3
    cert = break_induced(run_dual, 1, 2, method="dual")
    assert cert.method == "dual" and verify_certificate_induced(run_dual, cert)
    with pytest.raises(HypothesisError, match="degree mismatch"):
        break_induced(run_dual, 2, 2, method="dual")


def test_break_induced_errors(pentagon):
    with pytest.raises(HypothesisError):
        break_induced(SimplicialComplex.simplex("abc"), 1, 1)
    with pytest.raises(HypothesisError, match="homology vanishing"):
        break_induced(pentagon, 1, 1)
    with pytest.raises(ValueError):
        break_induced(pentagon, 1, 2, method="magic")


def test_disconnected_construction(disconnected):
    c1 = break_disconnected(disconnected, 1)
    assert len(c1.C) == 2 and len(c1.D) == 4 and len(set(c1.C) & set(c1.D)) == 1
    c2 = break_disconnected(disconnected, 2)
    assert named(disconnected, c2.C) == "uvx" and len(c2.D) == 3
    with pytest.raises(HypothesisError):
        break_disconnected(SimplicialComplex.from_names(["a", "b"], "ab"), 1)
    with pytest.raises(HypothesisError):
        break_disconnected(SimplicialComplex.from_names(["ab", "bc"], "abc"), 1)


def test_graph_cycle_construction(pentagon):
    assert graph_cycle_order(pentagon) == [0, 1, 2, 3, 4]
    hexagon = cycle_graph(6)
    cert = break_graph_cycle(hexagon, 2)
    assert hexagon.names(cert.C) == ("x1", "x3", "x4") and hexagon.names(cert.D) == ("x2", "x5", "x6")
    with pytest.raises(HypothesisError):
        break_graph_cycle(cycle_graph(3), 1)
    with pytest.raises(HypothesisError):
        break_graph_cycle(SimplicialComplex.from_names(["ab", "bc"], "abc"), 1)
    for n in range(4, 9):
        for a in range(1, n - 2):
            assert verify_certificate_induced(cycle_graph(n), break_graph_cycle(cycle_graph(n), a))


def test_induced_certificates_respect_degree_bounds():
    """|C| <= t_a, |D| <= t_b and |C| + |D| >= n for the Stanley-Reisner ideal."""
    for I in squarefree_ideals(31, 60):
        n = I.n
        if n < 2 or I.min_degree < 2:
            continue
        gamma = stanley_reisner_complex(I)
        d = I.min_degree
        i = n - d + 1
        if not reduced_homology_dim(gamma, d - 2):
            continue
        t = max_degrees(betti_hochster(I))
        for a in range(1, i):
            cert = break_induced(gamma, a, i - a, method="dual")
            assert verify_certificate_induced(gamma, cert)
            assert len(cert.C) <= t[a] and len(cert.D) <= t[i - a]
            assert len(cert.C) + len(cert.D) >= n


# -- searches --------------------------------------------------------------------------------

def test_search_link_certificates_run_example(run_dual):
    found = search_link_certificates(run_dual, 2, 2, limit=None)
    pairs = {(named(run_dual, c.F), named(run_dual, c.G)) for c in found}
    assert ("bd", "ac") in pairs
    assert all(verify_certificate_link(run_dual, c) for c in found)


def test_facet_intersections(run_dual):
    inter = facet_intersections(run_dual)
    assert () in inter and run_dual.face("a") in inter and run_dual.face("bd") in inter


def test_search_induced_certificates_pentagon(pentagon):
    found = search_induced_certificates(pentagon, 1, 2, limit=None)
    assert found and all(verify_certificate_induced(pentagon, c) for c in found)


def test_question_complements_run_example(run_ideal):
    records = search_question_complements(run_ideal)
    assert {(r.i, r.a, r.b) for r in records} == {(3, 1, 2), (4, 1, 3), (4, 2, 2)}
    assert not any(r.none_found for r in records)


def test_question_complements_requires_top_betti():
    with pytest.raises(HypothesisError):
        search_question_complements(MonomialIdeal.parse("ab bc cd", "abcd"))


def test_searches_find_witnesses_on_random_ideals():
    rng = random.Random(77)
    for I in squarefree_ideals(rng.randint(0, 10**6), 60, n_max=6):
        if I.min_degree < 2:
            continue
        try:
            records = search_question_complements(I)
        except HypothesisError:
            continue
        assert not any(r.none_found for r in records), str(I)


def test_membership_of_certificate_faces(run_dual):
    cert = break_on_links(run_dual, 2, 2)
    assert membership(run_dual, cert.F) and membership(run_dual, cert.G)
    assert alexander_dual(alexander_dual(run_dual)) == run_dual
