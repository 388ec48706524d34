"""Monomials, monomial ideals, polarization, Stanley-Reisner complexes and lcm lattices."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .combinatorics import (Face, SimplicialComplex, face_mask, mask_face, minimal_nonfaces,
                            minimal_transversals, order_complex)
from .errors import CapExceededError

MAX_GENERATORS = 24


@dataclass(frozen=True, order=False)
class Monomial:
    """A monomial as sorted ``(variable index, exponent)`` pairs with no zero exponents."""

    exponents: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        exps: dict[int, int] = {}
        for i, e in self.exponents:
            if e < 0 or i < 0:
                raise ValueError("exponents and variable indices must be nonnegative")
            exps[int(i)] = exps.get(int(i), 0) + int(e)
        object.__setattr__(self, "exponents", tuple(sorted((i, e) for i, e in exps.items() if e)))

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> Monomial:
        return cls(tuple(exps.items()))

    @classmethod
    def from_face(cls, face: Iterable[int]) -> Monomial:
        return cls(tuple((i, 1) for i in face))

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def support(self) -> Face:
        return tuple(i for i, _ in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exponents)

    def to_face(self) -> Face:
        if not self.is_squarefree:
            raise ValueError(f"{self} is not square-free")
        return self.support

    @property
    def sort_key(self) -> tuple[int, ...]:
        """Variable indices with multiplicity; lexicographic order on these."""
        return tuple(i for i, e in self.exponents for _ in range(e))

    def divides(self, other: Monomial) -> bool:
        theirs = other.as_dict
        return all(theirs.get(i, 0) >= e for i, e in self.exponents)

    def lcm(self, other: Monomial) -> Monomial:
        exps = dict(self.exponents)
        for i, e in other.exponents:
            exps[i] = max(exps.get(i, 0), e)
        return Monomial.from_dict(exps)

    def gcd(self, other: Monomial) -> Monomial:
        theirs = other.as_dict
        return Monomial(tuple((i, min(e, theirs[i])) for i, e in self.exponents if i in theirs))

    def format(self, variables: Sequence[str], sep: str | None = None) -> str:
        if not self.exponents:
            return "1"
        if sep is None:
            sep = "" if all(len(v) == 1 for v in variables) else "*"
        return sep.join(variables[i] + (f"^{e}" if e > 1 else "") for i, e in self.exponents)

    def __str__(self) -> str:
        return self.format([f"x{i + 1}" for i in range(max(self.support, default=-1) + 1)], sep="*")


ONE = Monomial()


class MonomialParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.pos = pos


_EXP = re.compile(r"\^(\d+)")


def parse_monomial(text: str, variables: Sequence[str]) -> Monomial:
    """Parse ``"ac"``, ``"x1*x2^2"``, ``"a^2b"`` or ``"1"`` over ``variables``.

    Without ``*`` separators names are matched greedily (longest first).
    """
    text = text.strip()
    if text == "1":
        return ONE
    by_len = sorted(range(len(variables)), key=lambda i: -len(variables[i]))
    exps: dict[int, int] = {}
    pos = 0
    expect_name = True
    while pos < len(text):
        if text[pos] == "*":
            if expect_name:
                raise MonomialParseError("unexpected '*'", pos)
            pos += 1
            expect_name = True
            continue
        for i in by_len:
            if text.startswith(variables[i], pos):
                pos += len(variables[i])
                m = _EXP.match(text, pos)
                e = 1
                if m:
                    e = int(m.group(1))
                    pos = m.end()
                exps[i] = exps.get(i, 0) + e
                expect_name = False
                break
        else:
            raise MonomialParseError(f"unknown variable at {text[pos:]!r}", pos)
    if expect_name:
        raise MonomialParseError("empty monomial", pos)
    return Monomial.from_dict(exps)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators (lexicographically sorted)."""

    variables: tuple[str, ...]
    generators: tuple[Monomial, ...] = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables) or any(not v for v in variables):
            raise ValueError("variable names must be distinct and nonempty")
        gens = set(self.generators)
        for g in gens:
            if g.support and g.support[-1] >= len(variables):
                raise IndexError(f"generator {g} uses an undeclared variable")
        minimal = [g for g in gens if not any(h != g and h.divides(g) for h in gens)]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "generators", tuple(sorted(minimal, key=lambda g: g.sort_key)))

    @classmethod
    def parse(cls, generators: Iterable[str] | str, variables: Sequence[str] | str) -> MonomialIdeal:
        """``MonomialIdeal.parse("ac bc cde", "abcde")``."""
        if isinstance(variables, str):
            variables = variables.split() if " " in variables else list(variables)
        if isinstance(generators, str):
            generators = generators.replace(",", " ").split()
        return cls(tuple(variables), tuple(parse_monomial(g, variables) for g in generators))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def min_degree(self) -> int:
        return min(g.degree for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    __contains__ = contains

    def format(self, m: Monomial) -> str:
        return m.format(self.variables)

    def __str__(self) -> str:
        return "(" + ",".join(self.format(g) for g in self.generators) + ")"


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """N(I) = {u : m_u ∉ I}.

    u is a face iff u^c meets every generator support, so facets are the
    complements of minimal transversals of the supports.
    """
    if not I.is_squarefree:
        raise ValueError("ideal is not square-free; polarize it first")
    full = (1 << I.n) - 1
    trans = minimal_transversals(face_mask(g.support) for g in I.generators)
    return SimplicialComplex(I.variables, tuple(mask_face(full & ~t) for t in trans))


def stanley_reisner_ideal(K: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(K.vertices, tuple(Monomial.from_face(u) for u in minimal_nonfaces(K)))


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, dict[str, tuple[str, ...]]]:
    """Standard polarization; ``x^e`` becomes ``x#1 * ... * x#e``.

    Square-free ideals are returned unchanged with the identity map.  Otherwise
    every variable ``x`` is replaced by ``x#1, ..., x#E`` where E is its largest
    exponent among the generators (at least 1, so unused variables survive).
    """
    if I.is_squarefree:
        return I, {v: (v,) for v in I.variables}
    top = [1] * I.n
    for g in I.generators:
        for i, e in g.exponents:
            top[i] = max(top[i], e)
    names: list[str] = []
    first: list[int] = []
    mapping: dict[str, tuple[str, ...]] = {}
    for i, v in enumerate(I.variables):
        first.append(len(names))
        copies = tuple(f"{v}#{k}" for k in range(1, top[i] + 1))
        mapping[v] = copies
        names.extend(copies)
    gens = tuple(Monomial(tuple((first[i] + k, 1) for i, e in g.exponents for k in range(e)))
                 for g in I.generators)
    return MonomialIdeal(tuple(names), gens), mapping


@dataclass(frozen=True)
class LcmLattice:
    """The lcm lattice of a monomial ideal, stored extensionally.

    Elements are ordered by degree then lexicographically, so the bottom ``1``
    comes first and the top (lcm of all generators) last.  Join is lcm.
    """

    variables: tuple[str, ...]
    elements: tuple[Monomial, ...]

    @cached_property
    def _position(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.elements)}

    @property
    def bottom(self) -> Monomial:
        return self.elements[0]

    @property
    def top(self) -> Monomial:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._position

    def index(self, m: Monomial) -> int:
        try:
            return self._position[m]
        except KeyError:
            raise ValueError(f"{m.format(self.variables)} is not in the lcm lattice") from None

    def leq(self, m: Monomial, other: Monomial) -> bool:
        return m.divides(other)

    def join(self, m: Monomial, other: Monomial) -> Monomial:
        self.index(m), self.index(other)
        return m.lcm(other)

    def meet(self, m: Monomial, other: Monomial) -> Monomial:
        """Greatest lower bound, found by search (it need not be the gcd)."""
        self.index(m), self.index(other)
        below = [e for e in self.elements if e.divides(m) and e.divides(other)]
        return next(e for e in below if all(f.divides(e) for f in below))

    def open_interval(self, m: Monomial) -> list[Monomial]:
        """Elements strictly between 1 and ``m``."""
        self.index(m)
        return [e for e in self.elements if e != self.bottom and e != m and e.divides(m)]

    def interval_complex(self, m: Monomial) -> SimplicialComplex:
        """Order complex of the open interval (1, m)."""
        inner = self.open_interval(m)
        names = [e.format(self.variables) for e in inner]
        return order_complex(inner, lambda x, y: x != y and x.divides(y), names=names)


def lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    if len(I.generators) > MAX_GENERATORS:
        raise CapExceededError(f"{len(I.generators)} generators exceeds the lattice cap of {MAX_GENERATORS}")
    elements = {ONE}
    for g in I.generators:
        elements |= {e.lcm(g) for e in elements}
    return LcmLattice(I.variables, tuple(sorted(elements, key=lambda m: (m.degree, m.sort_key))))


def are_complements(L: LcmLattice, I: MonomialIdeal, m: Monomial, m2: Monomial) -> bool:
    """lcm(m, m2) is the top of L and gcd(m, m2) is not in I."""
    L.index(m), L.index(m2)
    return m.lcm(m2) == L.top and not I.contains(m.gcd(m2))
