"""Finite simplicial complexes stored by their facets.

A face is a strictly increasing tuple of indices into the ordered ground set
``vertices``.  Facet lists are always kept inclusion-maximal, deduplicated and
sorted lexicographically, so two complexes are equal exactly when they have the
same ground set and the same faces.

Two degenerate complexes are distinguished throughout:

* the *void* complex has no faces at all (``facets == ()``);
* the *irrelevant* complex ``{∅}`` has the empty face only (``facets == ((),)``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

Face = tuple[int, ...]


def face_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        mask |= 1 << v
    return mask


def mask_face(mask: int) -> Face:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def maximalize(faces: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    """Drop duplicates and faces contained in other faces; sort the rest."""
    masks = sorted({face_mask(f) for f in faces}, key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in masks:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(mask_face(m) for m in kept))


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Inclusion-minimal sets (bitmasks) meeting every edge, by Berge's method.

    An empty edge cannot be hit, in which case there are no transversals.
    With no edges at all the empty set is the unique minimal transversal.
    """
    trans = [0]
    for e in sorted(set(edges)):
        if e == 0:
            return []
        hit = [t for t in trans if t & e]
        grown = {t | (1 << v) for t in trans if not t & e for v in mask_face(e)}
        cand = sorted(set(hit) | grown, key=lambda m: (m.bit_count(), m))
        trans = []
        for t in cand:
            if not any(k & ~t == 0 for k in trans):
                trans.append(t)
    return trans


def _split_names(token: str, names: Sequence[str]) -> list[str]:
    """Split ``token`` into vertex names: whole name, whitespace, or greedy match."""
    if token in names:
        return [token]
    if any(ch.isspace() for ch in token):
        return token.split()
    by_len = sorted(names, key=len, reverse=True)
    out, pos = [], 0
    while pos < len(token):
        for name in by_len:
            if name and token.startswith(name, pos):
                out.append(name)
                pos += len(name)
                break
        else:
            raise ValueError(f"cannot split {token!r} into vertex names at position {pos}")
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on an explicit ordered ground set.

    The ground set may contain vertices that lie in no facet; Alexander duality
    and Hochster's formula are taken relative to the whole ground set.
    """

    vertices: tuple[str, ...]
    facets: tuple[Face, ...] = field(default=())

    def __post_init__(self):
        verts = tuple(self.vertices)
        if any(not isinstance(v, str) or not v for v in verts):
            raise ValueError("vertex names must be nonempty strings")
        if len(set(verts)) != len(verts):
            raise ValueError("vertex names must be distinct")
        n = len(verts)
        facets = []
        for f in self.facets:
            f = tuple(sorted(set(int(v) for v in f)))
            if f and (f[0] < 0 or f[-1] >= n):
                raise IndexError(f"face {f} out of range for {n} vertices")
            facets.append(f)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "facets", maximalize(facets))

    @classmethod
    def from_names(cls, facets: Iterable, vertices: Sequence[str] | str | None = None):
        """Build from facets given by vertex names.

        A facet may be a sequence of names or a single string; strings are read
        as one vertex name, as whitespace separated names, or greedily split
        into known names (so ``"acd"`` works for single-letter vertices).
        """
        facets = list(facets)
        if isinstance(vertices, str):
            vertices = vertices.split() if " " in vertices else list(vertices)
        if vertices is None:
            found = set()
            for f in facets:
                found.update(list(f) if isinstance(f, str) and " " not in f else
                             (f.split() if isinstance(f, str) else f))
            vertices = sorted(found)
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        faces = []
        for f in facets:
            parts = _split_names(f, vertices) if isinstance(f, str) and f else list(f)
            try:
                faces.append([index[p] for p in parts])
            except KeyError as exc:
                raise ValueError(f"unknown vertex {exc.args[0]!r}") from None
        return cls(tuple(vertices), tuple(tuple(f) for f in faces))

    @classmethod
    def void(cls, vertices: Sequence[str]) -> SimplicialComplex:
        return cls(tuple(vertices), ())

    @classmethod
    def irrelevant(cls, vertices: Sequence[str]) -> SimplicialComplex:
        return cls(tuple(vertices), ((),))

    @classmethod
    def simplex(cls, vertices: Sequence[str]) -> SimplicialComplex:
        return cls(tuple(vertices), (tuple(range(len(vertices))),))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dim(self) -> int:
        """Dimension; -1 for ``{∅}`` and (by convention) -2 for the void complex."""
        return max((len(f) for f in self.facets), default=-1) - 1

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(face_mask(f) for f in self.facets)

    @cached_property
    def faces(self) -> frozenset[Face]:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return frozenset(out)

    @cached_property
    def used_vertices(self) -> Face:
        """Indices of ground vertices lying in some facet, i.e. V(K)."""
        mask = 0
        for m in self.facet_masks:
            mask |= m
        return mask_face(mask)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise ValueError(f"unknown vertex {name!r}") from None

    def face(self, spec) -> Face:
        """Turn names (or a name string, or indices) into a canonical face."""
        if isinstance(spec, str):
            spec = _split_names(spec, self.vertices) if spec else []
        out = set()
        for v in spec:
            i = self.index(v) if isinstance(v, str) else int(v)
            if not 0 <= i < self.n:
                raise IndexError(f"vertex index {i} out of range")
            out.add(i)
        return tuple(sorted(out))

    def names(self, face: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in face)

    def label(self, face: Iterable[int]) -> str:
        names = self.names(face)
        if not names:
            return "∅"
        sep = "" if all(len(v) == 1 for v in self.vertices) else " "
        return sep.join(names)

    def complement(self, face: Iterable[int]) -> Face:
        s = set(face)
        return tuple(i for i in range(self.n) if i not in s)

    def connected_components(self) -> list[Face]:
        """Vertex sets of connected components (of used vertices), by smallest vertex."""
        parent = {v: v for v in self.used_vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for f in self.facets:
            for v in f[1:]:
                ra, rb = find(f[0]), find(v)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        comps: dict[int, list[int]] = {}
        for v in self.used_vertices:
            comps.setdefault(find(v), []).append(v)
        return sorted(tuple(c) for c in comps.values())

    def __contains__(self, face) -> bool:
        return membership(self, tuple(face))

    def __str__(self) -> str:
        if self.is_void:
            return "void"
        return "⟨" + ",".join(self.label(f) for f in self.facets) + "⟩"


def _check_face(K: SimplicialComplex, s: Iterable[int]) -> Face:
    s = tuple(sorted(set(s)))
    if s and (s[0] < 0 or s[-1] >= K.n):
        raise IndexError(f"face {s} out of range for {K.n} vertices")
    return s


def membership(K: SimplicialComplex, s: Iterable[int]) -> bool:
    """True iff ``s`` lies in some facet; ∅ belongs to every non-void complex."""
    m = face_mask(_check_face(K, s))
    return any(m & ~f == 0 for f in K.facet_masks)


def faces_of_dim(K: SimplicialComplex, d: int) -> list[Face]:
    if d < -1:
        return []
    return sorted(f for f in K.faces if len(f) == d + 1)


def link(K: SimplicialComplex, A: Iterable[int]) -> SimplicialComplex:
    """lk_K(A) = {G : G ∩ A = ∅, G ∪ A ∈ K}, on the same ground set."""
    A = _check_face(K, A)
    if not membership(K, A):
        raise ValueError(f"{K.label(A)} is not a face of {K}")
    a = face_mask(A)
    return SimplicialComplex(K.vertices, tuple(mask_face(m & ~a) for m in K.facet_masks if a & ~m == 0))


def induced(K: SimplicialComplex, C: Iterable) -> SimplicialComplex:
    """Induced subcomplex K_C; the ground set is restricted to C (original order kept)."""
    keep = set(K.face(list(C)))
    new_index = {old: new for new, old in enumerate(sorted(keep))}
    verts = tuple(K.vertices[i] for i in sorted(keep))
    facets = tuple(tuple(new_index[v] for v in f if v in keep) for f in K.facets)
    return SimplicialComplex(verts, facets)


def minimal_nonfaces(K: SimplicialComplex) -> list[Face]:
    """Inclusion-minimal subsets of the ground set that are not faces.

    A set is a nonface iff it meets the complement of every facet, so these
    are the minimal transversals of the facet complements.
    """
    full = (1 << K.n) - 1
    return sorted(mask_face(t) for t in minimal_transversals(full & ~m for m in K.facet_masks))


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """{V ∖ F : F ∉ K}; facets are complements of minimal nonfaces.

    The dual of the full simplex is void and the dual of the void complex is
    the full simplex.
    """
    return SimplicialComplex(K.vertices, tuple(K.complement(u) for u in minimal_nonfaces(K)))


def is_cone(K: SimplicialComplex) -> int | None:
    """Smallest vertex lying in every facet, or None."""
    if K.is_void:
        raise ValueError("the void complex has no facets")
    common = -1
    for m in K.facet_masks:
        common &= m
    return (common & -common).bit_length() - 1 if common else None


def order_complex(elements: Sequence[Hashable],
                  less: Callable[[Hashable, Hashable], bool] | Iterable[tuple],
                  names: Sequence[str] | None = None) -> SimplicialComplex:
    """Complex of chains of a finite strict partial order.

    ``less`` is either a predicate ``less(x, y)`` or an iterable of pairs
    ``(x, y)`` meaning x < y.  The empty poset gives ``{∅}``.
    """
    elements = list(elements)
    r = len(elements)
    if callable(less):
        lt = [[bool(less(x, y)) for y in elements] for x in elements]
    else:
        pos = {e: i for i, e in enumerate(elements)}
        lt = [[False] * r for _ in range(r)]
        for x, y in less:
            lt[pos[x]][pos[y]] = True
    for i in range(r):
        if lt[i][i]:
            raise ValueError(f"relation is not irreflexive at {elements[i]!r}")
        for j in range(r):
            if lt[i][j]:
                if lt[j][i]:
                    raise ValueError("relation is not antisymmetric")
                for k in range(r):
                    if lt[j][k] and not lt[i][k]:
                        raise ValueError("relation is not transitive")
    covers = [[j for j in range(r) if lt[i][j] and not any(lt[i][k] and lt[k][j] for k in range(r))]
              for i in range(r)]
    minimal = [i for i in range(r) if not any(lt[j][i] for j in range(r))]
    chains: list[Face] = []
    stack = [(i,) for i in minimal]
    while stack:
        chain = stack.pop()
        nxt = covers[chain[-1]]
        if not nxt:
            chains.append(chain)
        stack.extend(chain + (j,) for j in nxt)
    if names is None:
        names = [str(e) for e in elements]
    return SimplicialComplex(tuple(names), tuple(chains) if r else ((),))
