"""Brute-force ground truth: backtracking search for homomorphisms between finite semigroups.

Variables are the source elements in index order and candidate images are
tried in ascending order, so the first map found is the lexicographically
least one.  Every time an element is mapped, the images of all products of
mapped elements are forced, and a clash prunes the branch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .morphism import Morphism
from .semigroup import FiniteSemigroup, SemigroupError, idempotent_power, maximal_subgroup

FOUND = "found"
NONE_EXHAUSTIVE = "none-exhaustive"
NONE_BUDGET = "none-budget"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 2_000_000


@dataclass(frozen=True)
class SearchResult:
    status: str
    morphism: Morphism | None
    nodes: int

    @property
    def found(self):
        return self.status == FOUND


class BudgetExhausted(SemigroupError):
    """Raised by the generator APIs when the node budget runs out."""


def monogenic_type(S: FiniteSemigroup, x: int) -> tuple[int, int]:
    """(index, period) of the cyclic subsemigroup generated by x."""
    seen = {}
    y, k = x, 1
    while y not in seen:
        seen[y] = k
        y = S.rows[y][x]
        k += 1
    return seen[y], k - seen[y]


def _iso_signature(S, x):
    e = idempotent_power(S, x)
    r = S.rows
    ups = sum(1 for f in S.idempotents if r[e][f] == e)
    downs = sum(1 for f in S.idempotents if r[f][e] == f)
    in_group = r[x][e] == x and r[e][x] == x
    return monogenic_type(S, x) + (len(maximal_subgroup(S, e)), ups, downs, in_group)


class _Backtracker:
    def __init__(self, S, T, injective, allowed, max_nodes):
        self.S, self.T = S, T
        self.injective = injective
        self.allowed = [set(a) for a in allowed]
        self.cands = [sorted(a) for a in allowed]
        self.max_nodes = max_nodes
        self.nodes = 0
        self.m = [-1] * S.n
        self.used = [False] * T.n
        self.assigned: list[int] = []

    def _assign(self, x, t):
        sr, tr = self.S.rows, self.T.rows
        m, used, assigned = self.m, self.used, self.assigned
        stack = [(x, t)]
        while stack:
            a, ta = stack.pop()
            if m[a] != -1:
                if m[a] != ta:
                    return False
                continue
            if ta not in self.allowed[a] or (self.injective and used[ta]):
                return False
            m[a] = ta
            used[ta] = True
            assigned.append(a)
            for b in assigned:
                tb = m[b]
                for p, q, tp, tq in ((a, b, ta, tb), (b, a, tb, ta)):
                    pq = sr[p][q]
                    tpq = tr[tp][tq]
                    if m[pq] == -1:
                        stack.append((pq, tpq))
                    elif m[pq] != tpq:
                        return False
        return True

    def _undo(self, mark):
        while len(self.assigned) > mark:
            a = self.assigned.pop()
            self.used[self.m[a]] = False
            self.m[a] = -1

    def run(self) -> Iterator[list[int]]:
        m = self.m
        x = next((i for i in range(len(m)) if m[i] == -1), None)
        if x is None:
            yield list(m)
            return
        for t in self.cands[x]:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise BudgetExhausted(f"search budget of {self.max_nodes} nodes exhausted")
            mark = len(self.assigned)
            if self._assign(x, t):
                yield from self.run()
            self._undo(mark)


def _embedding_candidates(S, T):
    t_types = {}
    for t in range(T.n):
        t_types.setdefault(monogenic_type(T, t), []).append(t)
    return [t_types.get(monogenic_type(S, x), []) for x in range(S.n)]


def _checked(S, T, mapping, injective):
    mor = Morphism(S, T, mapping)
    if not mor.is_homomorphism or (injective and not mor.is_injective):
        raise AssertionError(f"search produced an invalid map {mapping}")
    return mor


def find_embedding(S: FiniteSemigroup, T: FiniteSemigroup,
                   budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Least injective homomorphism S -> T, or a NONE status."""
    if S.n > T.n:
        return SearchResult(NONE_EXHAUSTIVE, None, 0)
    bt = _Backtracker(S, T, True, _embedding_candidates(S, T), budget.max_nodes)
    try:
        for mapping in bt.run():
            return SearchResult(FOUND, _checked(S, T, mapping, True), bt.nodes)
    except BudgetExhausted:
        return SearchResult(NONE_BUDGET, None, bt.nodes)
    return SearchResult(NONE_EXHAUSTIVE, None, bt.nodes)


def _iso_candidates(S, T):
    ss = [_iso_signature(S, x) for x in range(S.n)]
    ts = [_iso_signature(T, t) for t in range(T.n)]
    if Counter(ss) != Counter(ts):
        return None
    return [[t for t in range(T.n) if ts[t] == sig] for sig in ss]


def isomorphisms(S: FiniteSemigroup, T: FiniteSemigroup,
                 budget: SearchBudget = SearchBudget()) -> Iterator[Morphism]:
    """All isomorphisms S -> T in lexicographic order; raises BudgetExhausted past the budget."""
    if S.n != T.n:
        return
    cands = _iso_candidates(S, T)
    if cands is None:
        return
    bt = _Backtracker(S, T, True, cands, budget.max_nodes)
    for mapping in bt.run():
        yield _checked(S, T, mapping, True)


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup,
                  budget: SearchBudget = SearchBudget()) -> Morphism | None:
    return next(isomorphisms(S, T, budget), None)


@dataclass(frozen=True)
class HomEnumeration:
    morphisms: tuple[Morphism, ...]
    complete: bool  # False when the cap cut the listing short


def enumerate_homomorphisms(S: FiniteSemigroup, T: FiniteSemigroup, cap: int = 10_000,
                            budget: SearchBudget = SearchBudget()) -> HomEnumeration:
    idem = [t for t in range(T.n) if T.is_idempotent(t)]
    cands = [idem if S.is_idempotent(x) else list(range(T.n)) for x in range(S.n)]
    bt = _Backtracker(S, T, False, cands, budget.max_nodes)
    out = []
    try:
        for mapping in bt.run():
            if len(out) == cap:
                return HomEnumeration(tuple(out), False)
            out.append(_checked(S, T, mapping, False))
    except BudgetExhausted:
        return HomEnumeration(tuple(out), False)
    return HomEnumeration(tuple(out), True)
