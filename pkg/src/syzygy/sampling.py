"""Seeded random ideals and complexes for experiments and tests."""
from __future__ import annotations

import random

from .combinatorics import SimplicialComplex
from .homology import RATIONALS, FieldSpec, reduced_homology_dim
from .monomial import Monomial, MonomialIdeal


def variable_names(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n]) if n <= 26 else tuple(f"x{i + 1}" for i in range(n))


def random_squarefree_ideal(rng: random.Random, n: int, gens: int, min_deg: int = 1,
                            max_deg: int | None = None) -> MonomialIdeal:
    """``gens`` random square-free monomials (before minimalization) in n variables."""
    max_deg = min(n, max_deg or n)
    out = []
    for _ in range(gens):
        size = rng.randint(min(min_deg, max_deg), max_deg)
        out.append(Monomial.from_face(sorted(rng.sample(range(n), size))))
    return MonomialIdeal(variable_names(n), tuple(out))


def random_monomial_ideal(rng: random.Random, n: int, gens: int, max_exp: int = 2) -> MonomialIdeal:
    """Random monomial ideal with exponents up to ``max_exp`` (nonzero degree)."""
    out = []
    for _ in range(gens):
        exps = {}
        while not exps:
            exps = {i: e for i in range(n) if (e := rng.randint(0, max_exp))}
        out.append(Monomial.from_dict(exps))
    return MonomialIdeal(variable_names(n), tuple(out))


def random_complex(rng: random.Random, n: int, facets: int, max_size: int | None = None) -> SimplicialComplex:
    max_size = min(n, max_size or n)
    faces = [rng.sample(range(n), rng.randint(1, max_size)) for _ in range(facets)]
    return SimplicialComplex(variable_names(n), tuple(tuple(f) for f in faces))


def random_complex_with_top_homology(rng: random.Random, n: int, dim: int,
                                     k: FieldSpec = RATIONALS, tries: int = 1000) -> SimplicialComplex:
    """A ``dim``-dimensional complex on n vertices with H̃_dim != 0.

    Draws random sets of dim-faces (plus a few lower faces) until the top
    homology is nonzero.
    """
    for _ in range(tries):
        count = rng.randint(dim + 2, 3 * (dim + 2))
        faces = [tuple(rng.sample(range(n), dim + 1)) for _ in range(count)]
        faces += [tuple(rng.sample(range(n), rng.randint(1, dim))) for _ in range(rng.randint(0, 2)) if dim]
        K = SimplicialComplex(variable_names(n), tuple(faces))
        if K.dim == dim and reduced_homology_dim(K, dim, k):
            return K
    raise RuntimeError(f"no complex with top homology found in {tries} tries")
