"""Multigraded Betti numbers of S/I through simplicial homology.

Three independent routes are provided and are expected to agree exactly:

* ``betti_hochster``: β_{i,u} = dim H̃_{|u|-i-1}(Γ_u) with Γ the Stanley-Reisner complex;
* ``betti_hochster_dual``: β_{i,u} = dim H̃_{i-2}(lk_{Γ^∨}(u^c));
* ``betti_gpw``: β_{i,m} = dim H̃_{i-2}((1, m)) over the lcm lattice.

Multidegrees are stored as ``Monomial`` keys so that the lattice route also
covers ideals that are not square-free.  β_{0,1} = 1 is implied and not stored.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .combinatorics import Face, alexander_dual, induced, link, membership
from .errors import CapExceededError
from .homology import RATIONALS, FieldSpec, reduced_betti
from .monomial import (MAX_GENERATORS, Monomial, MonomialIdeal, lcm_lattice, polarize,
                       stanley_reisner_complex)

DEFAULT_MAX_N = 24


def max_n() -> int:
    """Subset-enumeration cap, overridable through ``SYZYGY_MAX_N``."""
    return int(os.environ.get("SYZYGY_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True)
class BettiTable:
    variables: tuple[str, ...]
    multigraded: dict[tuple[int, Monomial], int] = field(default_factory=dict)
    field: FieldSpec = RATIONALS

    @property
    def n(self) -> int:
        return len(self.variables)

    def get(self, i: int, m: Monomial | Iterable[int]) -> int:
        if not isinstance(m, Monomial):
            m = Monomial.from_face(m)
        if i == 0 and not m.exponents:
            return 1
        return self.multigraded.get((i, m), 0)

    def coarse(self) -> dict[tuple[int, int], int]:
        """β_{i,j} = sum of β_{i,m} over multidegrees of total degree j (i >= 1)."""
        out: dict[tuple[int, int], int] = {}
        for (i, m), r in self.multigraded.items():
            out[i, m.degree] = out.get((i, m.degree), 0) + r
        return dict(sorted(out.items()))

    def totals(self) -> list[int]:
        """Ranks of the free modules, starting with β_0 = 1."""
        top = max((i for i, _ in self.multigraded), default=0)
        tot = [1] + [0] * top
        for (i, _), r in self.multigraded.items():
            tot[i] += r
        return tot

    def grid(self) -> list[list[int]]:
        """Macaulay2 layout: ``grid[j - i][i]`` including the β_{0,0} corner."""
        coarse = self.coarse()
        cols = len(self.totals())
        rows = max((j - i for i, j in coarse), default=0) + 1
        g = [[0] * cols for _ in range(rows)]
        g[0][0] = 1
        for (i, j), r in coarse.items():
            g[j - i][i] = r
        return g

    def same_numbers(self, other: BettiTable) -> bool:
        """Compare entries only, ignoring the coefficient field."""
        return self.variables == other.variables and self.multigraded == other.multigraded


def _check_input(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ValueError("zero ideal")
    if not I.is_squarefree:
        raise ValueError("ideal is not square-free; polarize it first")
    if I.n > max_n():
        raise CapExceededError(f"{I.n} variables exceeds the cap of {max_n()} (SYZYGY_MAX_N)")


def _candidates(I: MonomialIdeal, full_sweep: bool) -> list[Face]:
    """Supports u that can carry nonzero β_{i,u}: lattice elements, or every subset."""
    if full_sweep or len(I.generators) > MAX_GENERATORS:
        return [u for size in range(1, I.n + 1) for u in combinations(range(I.n), size)]
    return [m.support for m in lcm_lattice(I).elements if m.exponents]


def _collect(variables, k, keys, work: Callable, threads: int | None) -> BettiTable:
    if threads and threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(work, keys))
    else:
        results = [work(u) for u in keys]
    table: dict[tuple[int, Monomial], int] = {}
    for entries in results:
        for (i, m), r in entries:
            table[i, m] = r
    return BettiTable(tuple(variables), dict(sorted(table.items(), key=lambda kv: (kv[0][0], kv[0][1].degree, kv[0][1].sort_key))), k)


def betti_hochster(I: MonomialIdeal, k: FieldSpec = RATIONALS, *, full_sweep: bool = False,
                   threads: int | None = None) -> BettiTable:
    """β_{i,u} = dim H̃_{|u|-i-1}(Γ_u), Γ = N(I).

    By default only supports of lcm-lattice elements are visited (Betti numbers
    vanish elsewhere); ``full_sweep`` visits all 2^n subsets.
    """
    _check_input(I)
    gamma = stanley_reisner_complex(I)

    def work(u):
        hb = reduced_betti(induced(gamma, u), k)
        m = Monomial.from_face(u)
        return [((len(u) - d - 1, m), r) for d, r in enumerate(hb, start=-1)
                if r and len(u) - d - 1 >= 1]

    return _collect(I.variables, k, _candidates(I, full_sweep), work, threads)


def betti_hochster_dual(I: MonomialIdeal, k: FieldSpec = RATIONALS, *, full_sweep: bool = False,
                        threads: int | None = None) -> BettiTable:
    """β_{i,u} = dim H̃_{i-2}(lk_{Γ^∨}(u^c)); zero when u^c is not a face of Γ^∨."""
    _check_input(I)
    dual = alexander_dual(stanley_reisner_complex(I))

    def work(u):
        uc = dual.complement(u)
        if not membership(dual, uc):
            return []
        hb = reduced_betti(link(dual, uc), k)
        m = Monomial.from_face(u)
        return [((d + 2, m), r) for d, r in enumerate(hb, start=-1) if r]

    return _collect(I.variables, k, _candidates(I, full_sweep), work, threads)


def betti_gpw(I: MonomialIdeal, k: FieldSpec = RATIONALS, *, threads: int | None = None) -> BettiTable:
    """β_{i,m} = dim H̃_{i-2}((1, m)_L) for lattice elements m > 1.

    Works for any monomial ideal, square-free or not.
    """
    if I.is_zero:
        raise ValueError("zero ideal")
    L = lcm_lattice(I)

    def work(m):
        hb = reduced_betti(L.interval_complex(m), k)
        return [((d + 2, m), r) for d, r in enumerate(hb, start=-1) if r]

    return _collect(I.variables, k, [m for m in L.elements if m.exponents], work, threads)


def max_degrees(B: BettiTable) -> dict[int, int]:
    """t_a = max{j : β_{a,j} != 0} for every nonzero column a >= 1."""
    t: dict[int, int] = {}
    for (i, j), r in B.coarse().items():
        if r:
            t[i] = max(t.get(i, j), j)
    return dict(sorted(t.items()))


@dataclass(frozen=True)
class SplitCheck:
    a: int
    b: int
    t_a: int | None
    t_b: int | None
    t_i: int

    @property
    def holds(self) -> bool:
        return self.t_a is not None and self.t_b is not None and self.t_i <= self.t_a + self.t_b


@dataclass(frozen=True)
class SubadditivityReport:
    """Outcome of checking t_i <= t_a + t_b at i = n - d + 1 (after polarization).

    Splits are unordered: only a <= b is listed.
    """

    ideal: MonomialIdeal
    n: int
    d: int
    i: int
    beta_top: int
    t: dict[int, int]
    splits: tuple[SplitCheck, ...]

    @property
    def hypothesis_met(self) -> bool:
        return self.beta_top != 0

    @property
    def passed(self) -> bool:
        return all(s.holds for s in self.splits)

    def lines(self) -> list[str]:
        head = f"n={self.n} d={self.d} i=n-d+1={self.i} β_{{{self.i},{self.n}}}={self.beta_top}"
        if not self.hypothesis_met:
            return [head, f"β_{{{self.i},{self.n}}}=0: theorem hypothesis not met"]
        out = [head, " ".join(f"t_{a}={t}" for a, t in self.t.items())]
        if not self.splits:
            out.append(f"i={self.i} has no split a+b with a,b>0: vacuous PASS")
        for s in self.splits:
            if s.t_a is None or s.t_b is None:
                out.append(f"t_{self.i}={s.t_i} but t_{s.a} or t_{s.b} undefined FAIL")
                continue
            rel = "≤" if s.holds else ">"
            out.append(f"t_{self.i}={s.t_i} {rel} t_{s.a}+t_{s.b}={s.t_a + s.t_b} {'PASS' if s.holds else 'FAIL'}")
        return out


def check_subadditivity_at_top(I: MonomialIdeal, k: FieldSpec = RATIONALS, *,
                               threads: int | None = None) -> SubadditivityReport:
    """Check subadditivity at the top homological degree i = n - d + 1.

    The ideal is polarized first, so n counts the polarized variables; graded
    Betti numbers (hence every t_a) are unchanged by polarization.
    """
    if I.is_zero:
        raise ValueError("zero ideal")
    P, _ = polarize(I)
    B = betti_hochster(P, k, threads=threads)
    t = max_degrees(B)
    n, d = P.n, P.min_degree
    i = n - d + 1
    beta = B.coarse().get((i, n), 0)
    splits = []
    if beta:
        t_i = t[i]
        splits = [SplitCheck(a, i - a, t.get(a), t.get(i - a), t_i) for a in range(1, i // 2 + 1)]
    return SubadditivityReport(P, n, d, i, beta, t, tuple(splits))
