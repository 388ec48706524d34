"""Reduced simplicial homology over Q or GF(p) with exact arithmetic.

Orientation is fixed by vertex index: the boundary of a face with sorted
vertices ``v_0 < ... < v_d`` is ``sum_k (-1)^k [face without v_k]``.  The chain
complex is augmented, so a vertex has boundary ``[∅]`` and ``{∅}`` has
one-dimensional homology in degree -1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .combinatorics import Face, SimplicialComplex, alexander_dual, faces_of_dim, membership

SUPPORT_CAP = 20


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, otherwise GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """``"rat"`` or ``"gf:<p>"``."""
        text = text.strip().lower()
        if text in ("rat", "q", "qq"):
            return RATIONALS
        if text.startswith("gf:"):
            return cls(int(text[3:]))
        raise ValueError(f"unknown field {text!r}; use 'rat' or 'gf:<p>'")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def coerce(self, x):
        if self.p == 0:
            return Fraction(x)
        x = Fraction(x)
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def inv(self, x):
        return 1 / Fraction(x) if self.p == 0 else pow(x, -1, self.p)

    def __str__(self) -> str:
        return "rat" if self.p == 0 else f"gf:{self.p}"


RATIONALS = FieldSpec(0)


def PrimeField(p: int) -> FieldSpec:
    return FieldSpec(p)


# -- elimination ------------------------------------------------------------

def rank(columns: Iterable[Mapping[int, object]], k: FieldSpec = RATIONALS) -> int:
    """Rank of a sparse matrix given as columns ``{row: entry}``.

    Column reduction on the largest nonzero row.  GF(2) runs on bitsets; Q runs
    fraction-free on integers (columns are rescaled, which preserves the span).
    """
    pivots: dict[int, object] = {}
    if k.p == 2:
        for col in columns:
            c = 0
            for r, x in col.items():
                if int(k.coerce(x)):
                    c ^= 1 << r
            while c:
                low = c.bit_length() - 1
                if low not in pivots:
                    pivots[low] = c
                    break
                c ^= pivots[low]
        return len(pivots)
    if k.p:
        p = k.p
        for col in columns:
            c = {r: k.coerce(x) for r, x in col.items()}
            c = {r: x for r, x in c.items() if x}
            while c:
                low = max(c)
                piv = pivots.get(low)
                if piv is None:
                    pivots[low] = c
                    break
                f = c[low] * pow(piv[low], -1, p) % p
                for r, x in piv.items():
                    y = (c.get(r, 0) - f * x) % p
                    if y:
                        c[r] = y
                    else:
                        c.pop(r, None)
        return len(pivots)
    for col in columns:
        c = _integral(col)
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = c
                break
            a, b = piv[low], c[low]
            new = {r: a * x for r, x in c.items()}
            for r, x in piv.items():
                y = new.get(r, 0) - b * x
                if y:
                    new[r] = y
                else:
                    new.pop(r, None)
            g = 0
            for x in new.values():
                g = gcd(g, x)
                if g == 1:
                    break
            c = {r: x // g for r, x in new.items()} if g > 1 else new
    return len(pivots)


def _integral(col: Mapping[int, object]) -> dict[int, int]:
    vals = {r: Fraction(x) for r, x in col.items() if x}
    den = 1
    for x in vals.values():
        den = den * x.denominator // gcd(den, x.denominator)
    return {r: int(x * den) for r, x in vals.items()}


def rref(rows: list[list], k: FieldSpec) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form of a dense matrix; returns (matrix, pivot columns)."""
    m = [[k.coerce(x) for x in row] for row in rows]
    ncols = len(m[0]) if m else 0
    p = k.p
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = k.inv(m[r][c])
        m[r] = [(x * inv) % p if p else x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [((x - f * y) % p if p else x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: list[list], ncols: int, k: FieldSpec) -> list[list]:
    """Kernel basis read off the RREF, one vector per free column (in column order)."""
    if not rows:
        return [[k.coerce(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows, k)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [k.coerce(0)] * ncols
        v[fc] = k.coerce(1)
        for i, pc in enumerate(pivots):
            v[pc] = (-m[i][fc]) % k.p if k.p else -m[i][fc]
        basis.append(v)
    return basis


# -- chains -----------------------------------------------------------------

def boundary_face(face: Face) -> list[tuple[Face, int]]:
    """Faces of the boundary of ``face`` with their signs."""
    return [(face[:i] + face[i + 1:], -1 if i % 2 else 1) for i in range(len(face))]


@dataclass(frozen=True, eq=True)
class Chain:
    """A field combination of faces of one dimension in a fixed complex."""

    complex: SimplicialComplex
    dim: int
    terms: Mapping[Face, object] = field(default_factory=dict)
    field: FieldSpec = RATIONALS

    def __post_init__(self):
        if self.dim < -2:
            raise ValueError("chain dimension must be at least -2")
        clean = {}
        for f, x in self.terms.items():
            f = tuple(sorted(f))
            if len(f) != self.dim + 1:
                raise ValueError(f"face {f} does not have dimension {self.dim}")
            if not membership(self.complex, f):
                raise ValueError(f"{self.complex.label(f)} is not a face of {self.complex}")
            x = self.field.coerce(x)
            if x:
                clean[f] = clean.get(f, 0) + x
        if self.field.p:
            clean = {f: x % self.field.p for f, x in clean.items()}
        object.__setattr__(self, "terms", {f: clean[f] for f in sorted(clean) if clean[f]})

    @classmethod
    def from_names(cls, K: SimplicialComplex, terms: Mapping[str, object], k: FieldSpec = RATIONALS) -> Chain:
        faces = {K.face(name): x for name, x in terms.items()}
        dims = {len(f) - 1 for f in faces}
        if len(dims) != 1:
            raise ValueError("chain terms must share one dimension")
        return cls(K, dims.pop(), faces, k)

    @classmethod
    def zero(cls, K: SimplicialComplex, dim: int, k: FieldSpec = RATIONALS) -> Chain:
        return cls(K, dim, {}, k)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> list[Face]:
        return list(self.terms)

    def in_complex(self, K: SimplicialComplex) -> Chain:
        return Chain(K, self.dim, self.terms, self.field)

    def __add__(self, other: Chain) -> Chain:
        if other.dim != self.dim:
            raise ValueError("cannot add chains of different dimensions")
        terms = dict(self.terms)
        for f, x in other.terms.items():
            terms[f] = terms.get(f, 0) + x
        return Chain(self.complex, self.dim, terms, self.field)

    def __neg__(self) -> Chain:
        return self.scale(-1)

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def scale(self, x) -> Chain:
        x = self.field.coerce(x)
        return Chain(self.complex, self.dim, {f: c * x for f, c in self.terms.items()}, self.field)

    def coefficient(self, face) -> object:
        return self.terms.get(tuple(sorted(face)), self.field.coerce(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for f, x in self.terms.items():
            if self.field.p and x > self.field.p // 2 and self.field.p > 2:
                x -= self.field.p
            sign = "-" if x < 0 else "+"
            mag = abs(x)
            coef = "" if mag == 1 else f"{mag}*"
            parts.append(f"{sign}{coef}[{self.complex.label(f)}]")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def boundary(c: Chain) -> Chain:
    if c.dim <= -1:
        return Chain.zero(c.complex, -2, c.field)
    terms: dict[Face, object] = {}
    for f, x in c.terms.items():
        for g, s in boundary_face(f):
            terms[g] = terms.get(g, 0) + s * x
    return Chain(c.complex, c.dim - 1, terms, c.field)


def is_cycle(c: Chain) -> bool:
    return boundary(c).is_zero()


def _boundary_columns(K: SimplicialComplex, d: int) -> tuple[list[Face], list[Face], list[dict[int, int]]]:
    rows = faces_of_dim(K, d - 1)
    cols = faces_of_dim(K, d)
    pos = {f: i for i, f in enumerate(rows)}
    return rows, cols, [{pos[g]: s for g, s in boundary_face(f)} for f in cols]


def _face_bound(K: SimplicialComplex) -> int:
    return sum(1 << len(f) for f in K.facets)


def reduced_betti(K: SimplicialComplex, k: FieldSpec = RATIONALS) -> list[int]:
    """``[dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim K}]``; empty for the void complex.

    Cones return zeros immediately.  When the Alexander dual on the same ground
    set is much smaller, the answer is read off it instead: over a field,
    dim H̃_d(K) = dim H̃_{m-d-3}(K^∨) with m the number of vertices.
    """
    if K.is_void:
        return []
    common = -1
    for mask in K.facet_masks:
        common &= mask
    if common and not K.is_irrelevant:
        return [0] * (K.dim + 2)  # a cone is contractible
    if _face_bound(K) > 64:
        dual = alexander_dual(K)
        if 4 * _face_bound(dual) < _face_bound(K):
            m = K.n
            hb = _reduced_betti_direct(dual, k)
            return [hb[m - d - 2] if 0 <= m - d - 2 < len(hb) else 0 for d in range(-1, K.dim + 1)]
    return _reduced_betti_direct(K, k)


def _reduced_betti_direct(K: SimplicialComplex, k: FieldSpec) -> list[int]:
    if K.is_void:
        return []
    by_dim: dict[int, list[Face]] = {}
    for f in K.faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = K.dim
    counts = [len(by_dim.get(d, ())) for d in range(-1, top + 1)]
    ranks = [0] * (top + 3)  # ranks[d + 1] = rank of ∂_d : C_d -> C_{d-1}
    for d in range(0, top + 1):
        rows = sorted(by_dim[d - 1])
        pos = {f: i for i, f in enumerate(rows)}
        cols = [{pos[g]: s for g, s in boundary_face(f)} for f in by_dim[d]]
        ranks[d + 1] = rank(cols, k)
    return [counts[d + 1] - ranks[d + 1] - ranks[d + 2] for d in range(-1, top + 1)]


def reduced_homology_dim(K: SimplicialComplex, d: int, k: FieldSpec = RATIONALS) -> int:
    """dim H̃_d(K; k); zero outside ``-1 <= d <= dim K``."""
    betti = reduced_betti(K, k)
    return betti[d + 1] if 0 <= d + 1 < len(betti) else 0


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    return sum(-1 if len(f) % 2 == 0 else 1 for f in K.faces)


def _column(c: Chain, rows: list[Face]) -> dict[int, object]:
    pos = {f: i for i, f in enumerate(rows)}
    return {pos[f]: x for f, x in c.terms.items()}


def is_boundary(c: Chain, k: FieldSpec | None = None) -> bool:
    """True iff the cycle ``c`` lies in the image of ∂_{d+1}."""
    k = k or c.field
    if not is_cycle(c):
        raise ValueError("chain is not a cycle")
    if c.is_zero():
        return True
    K = c.complex
    rows, _, cols = _boundary_columns(K, c.dim + 1)
    return rank(cols, k) == rank(cols + [_column(c, rows)], k)


def find_nonbounding_cycle(K: SimplicialComplex, d: int, k: FieldSpec = RATIONALS) -> Chain | None:
    """First RREF kernel basis vector of ∂_d that is not a boundary, or None."""
    if d < -1 or d > K.dim:
        return None
    if reduced_homology_dim(K, d, k) == 0:
        return None
    rows, cols, columns = _boundary_columns(K, d)
    dense = [[0] * len(cols) for _ in rows] if d >= 0 else []
    for j, col in enumerate(columns if d >= 0 else []):
        for i, x in col.items():
            dense[i][j] = x
    for vec in nullspace(dense, len(cols), k):
        z = Chain(K, d, {f: x for f, x in zip(cols, vec) if x}, k)
        if not is_boundary(z, k):
            return z
    raise AssertionError("kernel lies in the image although homology is nonzero")


def support_complex(c: Chain) -> SimplicialComplex:
    if c.is_zero():
        raise ValueError("the zero chain has no support")
    return SimplicialComplex(c.complex.vertices, tuple(c.terms))


def is_face_minimal(c: Chain, k: FieldSpec | None = None) -> bool:
    """No proper part of the support carries a nonzero cycle.

    Equivalent to the boundary map restricted to the support having a
    one-dimensional kernel (the line spanned by ``c``).
    """
    k = k or c.field
    if c.is_zero() or not is_cycle(c):
        raise ValueError("need a nonzero cycle")
    if len(c.terms) > SUPPORT_CAP:
        raise ValueError(f"support of size {len(c.terms)} exceeds the cap of {SUPPORT_CAP}")
    columns = [{g: s for g, s in boundary_face(f)} for f in c.terms]
    rows = sorted({g for col in columns for g in col})
    pos = {g: i for i, g in enumerate(rows)}
    nullity = len(columns) - rank([{pos[g]: s for g, s in col.items()} for col in columns], k)
    return nullity == 1
