"""Breaking top-dimensional cycles into lower-dimensional ones.

Two dual settings are handled:

* on links: for a d-dimensional complex Δ with H̃_d(Δ) != 0 and a + b = d + 2,
  find facet intersections F, G with F ∩ G = ∅, F ∪ G ∉ Δ,
  H̃_{a-2}(lk F) != 0 and H̃_{b-2}(lk G) != 0;
* on induced subcomplexes: for Γ on n vertices with H̃_h(Γ) != 0 and
  a + b = n - h - 1, find C ∪ D = V with C ∩ D ∈ Γ,
  H̃_{|C|-a-1}(Γ_C) != 0 and H̃_{|D|-b-1}(Γ_D) != 0.

Every certificate is re-verified with fresh homology computations before it
is returned.  Ties are always broken by taking the first candidate in
canonical (lexicographic) order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .betti import betti_gpw
from .combinatorics import (Face, SimplicialComplex, alexander_dual, face_mask, induced, link,
                            mask_face, membership, minimal_nonfaces)
from .errors import CapExceededError, HypothesisError, VerificationError
from .homology import (RATIONALS, Chain, FieldSpec, find_nonbounding_cycle, is_boundary, is_cycle,
                       reduced_betti, reduced_homology_dim, support_complex)
from .monomial import Monomial, MonomialIdeal, are_complements, lcm_lattice

SEARCH_MAX_N = 16


def permutation_sign(seq: Face, reference: Face) -> int:
    """Sign of the permutation taking sorted ``reference`` to ``seq``."""
    pos = [reference.index(v) for v in seq]
    inversions = sum(1 for i in range(len(pos)) for j in range(i + 1, len(pos)) if pos[i] > pos[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class LinkDescent:
    A: Face
    s: int
    sigma_A: Chain
    signs: dict[Face, int]

    @property
    def link(self) -> SimplicialComplex:
        return self.sigma_A.complex


def descend(gamma: SimplicialComplex, sigma: Chain, A, k: FieldSpec | None = None) -> LinkDescent:
    """Push the cycle ``sigma`` down to lk(A).

    Each support face F ⊇ A contributes ε_F · a_F · [F ∖ A], where ε_F is the
    sign of the permutation listing A first and then F ∖ A (both sorted).
    """
    k = k or sigma.field
    A = gamma.face(A)
    if sigma.complex != gamma:
        sigma = sigma.in_complex(gamma)
    if not is_cycle(sigma):
        raise ValueError("sigma is not a cycle")
    if not membership(support_complex(sigma), A):
        raise ValueError(f"{gamma.label(A)} is not a face of the support complex")
    lk = link(gamma, A)
    a = set(A)
    terms, signs = {}, {}
    for F, x in sigma.terms.items():
        if a <= set(F):
            rest = tuple(v for v in F if v not in a)
            eps = permutation_sign(A + rest, F)
            signs[F] = eps
            terms[rest] = eps * x
    sigma_A = Chain(lk, sigma.dim - len(A), terms, k)
    if not is_cycle(sigma_A):
        raise VerificationError(f"descended chain over {gamma.label(A)} is not a cycle")
    return LinkDescent(A, len(signs), sigma_A, signs)


def facets_containing(K: SimplicialComplex, face: Face) -> tuple[int, ...]:
    m = face_mask(face)
    return tuple(j for j, f in enumerate(K.facet_masks) if m & ~f == 0)


def intersection_of(K: SimplicialComplex, indices) -> Face:
    common = -1
    for j in indices:
        common &= K.facet_masks[j]
    return mask_face(common) if indices else ()


def facet_intersection_check(gamma: SimplicialComplex, sigma: Chain, A, k: FieldSpec | None = None) -> Face:
    """Intersection of the facets of ``gamma`` containing A; it must equal A."""
    k = k or sigma.field
    A = gamma.face(A)
    if sigma.complex != gamma:
        sigma = sigma.in_complex(gamma)
    if sigma.dim != gamma.dim:
        raise ValueError(f"need a top-dimensional cycle: dim sigma={sigma.dim}, dim gamma={gamma.dim}")
    if is_boundary(sigma, k):
        raise ValueError("sigma is a boundary")
    if not membership(support_complex(sigma), A):
        raise ValueError(f"{gamma.label(A)} is not a face of the support complex")
    inter = intersection_of(gamma, facets_containing(gamma, A))
    if inter != A:
        raise VerificationError(f"facets containing {gamma.label(A)} meet in {gamma.label(inter)}")
    return inter


# -- certificates -------------------------------------------------------------

@dataclass(frozen=True)
class BreakCertificateLink:
    complex: SimplicialComplex
    a: int
    b: int
    F: Face
    G: Face
    A: tuple[int, ...]
    B: tuple[int, ...]
    witnesses: tuple[int, int]
    sigma_F: Chain | None = None
    sigma_G: Chain | None = None

    def summary(self) -> str:
        K = self.complex
        return (f"F={K.label(self.F)} G={K.label(self.G)} a={self.a} b={self.b}: "
                f"dim H̃_{self.a - 2}(lk F)={self.witnesses[0]}, dim H̃_{self.b - 2}(lk G)={self.witnesses[1]}")


@dataclass(frozen=True)
class BreakCertificateInduced:
    complex: SimplicialComplex
    a: int
    b: int
    C: Face
    D: Face
    witnesses: tuple[int, int]
    method: str = ""

    def summary(self) -> str:
        K = self.complex
        return (f"C={{{','.join(K.names(self.C))}}} D={{{','.join(K.names(self.D))}}} a={self.a} b={self.b}: "
                f"dim H̃_{len(self.C) - self.a - 1}(Γ_C)={self.witnesses[0]}, "
                f"dim H̃_{len(self.D) - self.b - 1}(Γ_D)={self.witnesses[1]}")


def link_certificate(delta: SimplicialComplex, a: int, b: int, F, G, k: FieldSpec = RATIONALS,
                     sigma_F: Chain | None = None, sigma_G: Chain | None = None) -> BreakCertificateLink:
    """Assemble (without verifying) a certificate for given faces F and G."""
    F, G = delta.face(F), delta.face(G)
    wF = reduced_homology_dim(link(delta, F), a - 2, k) if membership(delta, F) else 0
    wG = reduced_homology_dim(link(delta, G), b - 2, k) if membership(delta, G) else 0
    return BreakCertificateLink(delta, a, b, F, G, facets_containing(delta, F), facets_containing(delta, G),
                                (wF, wG), sigma_F, sigma_G)


def verify_certificate_link(delta: SimplicialComplex, cert: BreakCertificateLink, k: FieldSpec = RATIONALS) -> bool:
    """Re-check every condition of a link certificate from scratch."""
    try:
        if cert.a < 1 or cert.b < 1 or not cert.A or not cert.B:
            return False
        r = len(delta.facets)
        if any(not 0 <= j < r for j in cert.A + cert.B):
            return False
        F, G = tuple(cert.F), tuple(cert.G)
        if intersection_of(delta, cert.A) != F or intersection_of(delta, cert.B) != G:
            return False
        if set(F) & set(G) or membership(delta, tuple(sorted(set(F) | set(G)))):
            return False
        wF = reduced_homology_dim(link(delta, F), cert.a - 2, k)
        wG = reduced_homology_dim(link(delta, G), cert.b - 2, k)
        if not wF or not wG or (wF, wG) != tuple(cert.witnesses):
            return False
        for face, sigma, dim in ((F, cert.sigma_F, cert.a - 2), (G, cert.sigma_G, cert.b - 2)):
            if sigma is None:
                continue
            if sigma.complex != link(delta, face) or sigma.dim != dim or sigma.is_zero():
                return False
            if not is_cycle(sigma) or is_boundary(sigma, k):
                return False
        return True
    except (ValueError, IndexError):
        return False


def induced_certificate(gamma: SimplicialComplex, a: int, b: int, C, D, k: FieldSpec = RATIONALS,
                        method: str = "") -> BreakCertificateInduced:
    C, D = gamma.face(C), gamma.face(D)
    wC = reduced_homology_dim(induced(gamma, C), len(C) - a - 1, k)
    wD = reduced_homology_dim(induced(gamma, D), len(D) - b - 1, k)
    return BreakCertificateInduced(gamma, a, b, C, D, (wC, wD), method)


def verify_certificate_induced(gamma: SimplicialComplex, cert: BreakCertificateInduced,
                               k: FieldSpec = RATIONALS) -> bool:
    try:
        C, D = tuple(cert.C), tuple(cert.D)
        if cert.a < 1 or cert.b < 1 or not C or not D:
            return False
        if set(C) | set(D) != set(range(gamma.n)):
            return False
        if not membership(gamma, tuple(sorted(set(C) & set(D)))):
            return False
        wC = reduced_homology_dim(induced(gamma, C), len(C) - cert.a - 1, k)
        wD = reduced_homology_dim(induced(gamma, D), len(D) - cert.b - 1, k)
        return bool(wC and wD) and (wC, wD) == tuple(cert.witnesses)
    except (ValueError, IndexError):
        return False


# -- constructions ------------------------------------------------------------

def break_on_links(delta: SimplicialComplex, a: int, b: int, k: FieldSpec = RATIONALS) -> BreakCertificateLink:
    """Constructive breaking of a top-dimensional cycle of ``delta`` on links.

    Follows the three cases of the proof: two facets in different components
    (a = b = 1, accepted in any dimension as long as H̃_0(Δ) != 0); a vertex against a facet avoiding it (one of a, b equal to 1);
    and for a, b >= 2 a split of two adjacent support facets F_1, F_2, giving
    |F| = b and |G| = a.
    """
    d = delta.dim
    if a == 1 and b == 1 and d > 0:
        # only H̃_0 matters here: facets in two components break it in any dimension
        if not reduced_homology_dim(delta, 0, k):
            raise HypothesisError("homology vanishing: H̃_0(Δ) = 0")
        comp_of = {v: c for c in delta.connected_components() for v in c}
        F = delta.facets[0]
        G = next(f for f in delta.facets if f and comp_of[f[0]] != comp_of[F[0]])
        cert = link_certificate(delta, 1, 1, F, G, k)
        if not verify_certificate_link(delta, cert, k):
            raise VerificationError(f"emitted link certificate failed verification: {cert.summary()}")
        return cert
    if a < 1 or b < 1 or a + b != d + 2:
        raise HypothesisError(f"degree mismatch: need a, b > 0 and a + b = dim + 2 = {d + 2}, got a={a}, b={b}")
    sigma = find_nonbounding_cycle(delta, d, k)
    if sigma is None:
        raise HypothesisError(f"homology vanishing: H̃_{d}(Δ) = 0")
    support = sigma.support
    sigma_F = sigma_G = None
    if a == 1 and b == 1:
        comp_of = {v: c for c in delta.connected_components() for v in c}
        F = support[0]
        G = next(f for f in support if comp_of[f[0]] != comp_of[F[0]])
    elif a == 1 or b == 1:
        v = min(x for f in support for x in f)
        facet = next(f for f in support if v not in f)
        if b == 1:
            F, G = (v,), facet
            sigma_F = descend(delta, sigma, F, k).sigma_A
        else:
            F, G = facet, (v,)
            sigma_G = descend(delta, sigma, G, k).sigma_A
    else:
        F1 = support[0]
        w1, vs = F1[0], F1[1:]
        ridge = set(F1) - {vs[0]}
        partners = [f for f in support if f != F1 and ridge <= set(f)]
        if not partners:
            raise VerificationError(f"ridge {delta.label(sorted(ridge))} of {delta.label(F1)} has no partner facet")
        F2 = partners[0]
        w2 = next(x for x in F2 if x not in ridge)
        G = tuple(sorted(vs[:a]))
        F = tuple(sorted(vs[a:] + (w1, w2)))
        sigma_F = descend(delta, sigma, F, k).sigma_A
        sigma_G = descend(delta, sigma, G, k).sigma_A
    cert = link_certificate(delta, a, b, F, G, k, sigma_F, sigma_G)
    if not verify_certificate_link(delta, cert, k):
        raise VerificationError(f"emitted link certificate failed verification: {cert.summary()}")
    return cert


def _check_induced(gamma: SimplicialComplex, cert: BreakCertificateInduced, k: FieldSpec) -> BreakCertificateInduced:
    if not verify_certificate_induced(gamma, cert, k):
        raise VerificationError(f"emitted induced certificate failed verification: {cert.summary()}")
    return cert


def break_disconnected(gamma: SimplicialComplex, a: int, k: FieldSpec = RATIONALS) -> BreakCertificateInduced:
    """Construction for disconnected complexes, with b = n - a - 1.

    Vertices are relabelled x_1..x_n: components sorted by size (then smallest
    vertex), x_k the smallest vertex of the k-th component, and the remaining
    vertices listed component by component.  C = {x_1..x_{a+1}} and
    D = {x_1, x_{a+2}..x_n}.
    """
    n = gamma.n
    if len(gamma.used_vertices) != n:
        raise HypothesisError("every ground vertex must lie in a facet")
    comps = sorted(gamma.connected_components(), key=lambda c: (len(c), c))
    if len(comps) < 2:
        raise HypothesisError("complex is connected")
    if not 1 <= a < n - 1:
        raise HypothesisError(f"need 1 <= a < n - 1 = {n - 1}, got a={a}")
    x = [c[0] for c in comps] + [v for c in comps for v in c[1:]]
    C = x[:a + 1]
    D = [x[0]] + x[a + 1:]
    return _check_induced(gamma, induced_certificate(gamma, a, n - a - 1, C, D, k, "disconnected"), k)


def graph_cycle_order(gamma: SimplicialComplex) -> list[int] | None:
    """Vertex order x_1..x_n if ``gamma`` is a single graph cycle on its ground set.

    x_1 is the smallest vertex and x_2 its smaller neighbour.
    """
    n = gamma.n
    if n < 3 or any(len(f) != 2 for f in gamma.facets) or len(gamma.facets) != n:
        return None
    nbrs: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in gamma.facets:
        nbrs[u].append(v)
        nbrs[v].append(u)
    if any(len(x) != 2 for x in nbrs.values()):
        return None
    order = [0, min(nbrs[0])]
    while len(order) < n:
        prev, cur = order[-2], order[-1]
        nxt = nbrs[cur][0] if nbrs[cur][1] == prev else nbrs[cur][1]
        if nxt == order[0]:
            return None
        order.append(nxt)
    return order if order[0] in nbrs[order[-1]] else None


def break_graph_cycle(gamma: SimplicialComplex, a: int, k: FieldSpec = RATIONALS) -> BreakCertificateInduced:
    """Construction for a single graph cycle, with b = n - a - 2.

    C = {x_1, x_3, ..., x_{a+2}} and D = {x_2, x_{a+3}, ..., x_n}.
    """
    x = graph_cycle_order(gamma)
    if x is None:
        raise HypothesisError("complex is not a single graph cycle")
    n = gamma.n
    if not 1 <= a < n - 2:
        raise HypothesisError(f"need 1 <= a < n - 2 = {n - 2}, got a={a}")
    C = [x[0]] + x[2:a + 2]
    D = [x[1]] + x[a + 2:]
    return _check_induced(gamma, induced_certificate(gamma, a, n - a - 2, C, D, k, "graph-cycle"), k)


def break_induced(gamma: SimplicialComplex, a: int, b: int, k: FieldSpec = RATIONALS,
                  method: str = "auto") -> BreakCertificateInduced:
    """Find C, D breaking the homology of ``gamma`` in degree h = n - a - b - 1.

    ``method``:

    * ``"dual"``: requires h = d - 2 with d the smallest nonface size; breaks
      the top cycle of the Alexander dual on links and returns C = F^c, D = G^c.
    * ``"search"``: exhaustive search in canonical order.
    * ``"auto"`` (default): the disconnected or graph-cycle construction when
      the complex has that shape, else ``"dual"`` when its hypothesis holds,
      else ``"search"``.
    """
    n = gamma.n
    if a < 1 or b < 1:
        raise HypothesisError(f"need a, b > 0, got a={a}, b={b}")
    nonfaces = minimal_nonfaces(gamma)
    if not nonfaces:
        raise HypothesisError("complex is a full simplex: all reduced homology vanishes")
    d = min(len(u) for u in nonfaces)
    h = n - a - b - 1
    if method == "dual":
        if a + b != n - d + 1:
            raise HypothesisError(f"degree mismatch: a + b must equal n - d + 1 = {n - d + 1}")
    elif method not in ("auto", "search"):
        raise ValueError(f"unknown method {method!r}")
    if reduced_homology_dim(gamma, h, k) == 0:
        raise HypothesisError(f"homology vanishing: H̃_{h}(Γ) = 0")
    if method == "auto":
        if h == 0 and len(gamma.used_vertices) == n and len(gamma.connected_components()) > 1:
            return break_disconnected(gamma, a, k)
        if h == 1 and graph_cycle_order(gamma) is not None:
            return break_graph_cycle(gamma, a, k)
        method = "dual" if h == d - 2 else "search"
    if method == "dual":
        cert = break_on_links(alexander_dual(gamma), a, b, k)
        out = induced_certificate(gamma, a, b, gamma.complement(cert.F), gamma.complement(cert.G), k, "dual")
        return _check_induced(gamma, out, k)
    found = search_induced_certificates(gamma, a, b, k, limit=1)
    if not found:
        raise VerificationError(f"no certificate exists for a={a}, b={b}: potential counterexample")
    return found[0]


# -- searches -----------------------------------------------------------------

def _subsets(n: int) -> Iterator[Face]:
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def search_induced_certificates(gamma: SimplicialComplex, a: int, b: int, k: FieldSpec = RATIONALS,
                                limit: int | None = 1) -> list[BreakCertificateInduced]:
    """Exhaustive search for (C, D) in canonical order; at most ``limit`` results."""
    n = gamma.n
    if n > SEARCH_MAX_N:
        raise CapExceededError(f"{n} vertices exceeds the search cap of {SEARCH_MAX_N}")
    cache: dict[Face, list[int]] = {}

    def h(U: Face, deg: int) -> int:
        if U not in cache:
            cache[U] = reduced_betti(induced(gamma, U), k)
        hb = cache[U]
        return hb[deg + 1] if 0 <= deg + 1 < len(hb) else 0

    out = []
    everything = set(range(n))
    for C in _subsets(n):
        if not h(C, len(C) - a - 1):
            continue
        rest = sorted(everything - set(C))
        for T in sorted((f for f in gamma.faces if set(f) <= set(C)), key=lambda f: (len(f), f)):
            D = tuple(sorted(rest + list(T)))
            if D and h(D, len(D) - b - 1):
                out.append(BreakCertificateInduced(gamma, a, b, C, D, (h(C, len(C) - a - 1), h(D, len(D) - b - 1)),
                                                   "search"))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def facet_intersections(delta: SimplicialComplex) -> list[Face]:
    """All intersections of nonempty sets of facets, by size then lexicographically."""
    seen = set(delta.facet_masks)
    frontier = set(seen)
    while frontier:
        new = {x & f for x in frontier for f in delta.facet_masks} - seen
        seen |= new
        frontier = new
    return sorted((mask_face(m) for m in seen), key=lambda f: (len(f), f))


def search_link_certificates(delta: SimplicialComplex, a: int, b: int, k: FieldSpec = RATIONALS,
                             limit: int | None = 1) -> list[BreakCertificateLink]:
    """Exhaustive search over facet intersections F, G; at most ``limit`` results."""
    if a < 1 or b < 1:
        raise HypothesisError(f"need a, b > 0, got a={a}, b={b}")
    if reduced_homology_dim(delta, a + b - 2, k) == 0:
        raise HypothesisError(f"homology vanishing: H̃_{a + b - 2}(Δ) = 0")
    if delta.n > SEARCH_MAX_N:
        raise CapExceededError(f"{delta.n} vertices exceeds the search cap of {SEARCH_MAX_N}")
    cands = facet_intersections(delta)
    hom = {f: reduced_betti(link(delta, f), k) for f in cands}

    def h(f, deg):
        hb = hom[f]
        return hb[deg + 1] if 0 <= deg + 1 < len(hb) else 0

    out = []
    for F in (f for f in cands if h(f, a - 2)):
        for G in (g for g in cands if h(g, b - 2)):
            if set(F) & set(G) or membership(delta, tuple(sorted(set(F) | set(G)))):
                continue
            out.append(BreakCertificateLink(delta, a, b, F, G, facets_containing(delta, F),
                                            facets_containing(delta, G), (h(F, a - 2), h(G, b - 2))))
            if limit is not None and len(out) >= limit:
                return out
    return out


@dataclass(frozen=True)
class ComplementSearch:
    """Complement pairs (m, m') in LCM(I) with β_{a,m} != 0 and β_{b,m'} != 0."""

    i: int
    a: int
    b: int
    witnesses: tuple[tuple[Monomial, Monomial], ...]

    @property
    def none_found(self) -> bool:
        return not self.witnesses


def search_question_complements(I: MonomialIdeal, k: FieldSpec = RATIONALS,
                                limit: int | None = None) -> list[ComplementSearch]:
    """For each i with β_{i,top} != 0 and each split i = a + b (a <= b), list complement witnesses.

    ``top`` is the lcm of all generators.  A record with no witnesses on a valid
    instance would be a counterexample to the complement question.
    """
    L = lcm_lattice(I)
    B = betti_gpw(I, k)
    top = L.top
    degrees = sorted(i for (i, m) in B.multigraded if m == top)
    if not degrees:
        raise HypothesisError("no nonzero Betti number in the top multidegree")
    records = []
    for i in degrees:
        for a in range(1, i // 2 + 1):
            b = i - a
            left = [m for m in L.elements if B.get(a, m)]
            right = [m for m in L.elements if B.get(b, m)]
            found = []
            for m in left:
                for m2 in right:
                    if are_complements(L, I, m, m2):
                        found.append((m, m2))
                        if limit is not None and len(found) >= limit:
                            break
                if limit is not None and len(found) >= limit:
                    break
            records.append(ComplementSearch(i, a, b, tuple(found)))
    return records
