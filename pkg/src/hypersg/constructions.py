"""Derived semigroups (products, zeros, semidirect products, Brandt, Rees quotients)
and the explicit embedding maps into power semigroups.

Product carriers use mixed-radix indices with the rightmost factor fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .hyperspace import (
    CapExceeded,
    PowerSemigroup,
    SubsetMap,
    bits_elements,
    max_table,
    power_semigroup,
    union_tighten,
)
from .morphism import Morphism
from .semigroup import FiniteSemigroup, SemigroupError, Subset, group_facts, require_group
from .search import isomorphisms


class InvalidAction(SemigroupError):
    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class NotAnIdeal(SemigroupError):
    def __init__(self, witness):
        s, i = witness
        super().__init__(f"not an ideal: product of {s} and {i} leaves the subset")
        self.witness = witness


# ---------------------------------------------------------------- products

def mixed_radix(coords, radices) -> int:
    idx = 0
    for c, r in zip(coords, radices):
        idx = idx * r + c
    return idx


def mixed_radix_coords(idx, radices) -> tuple[int, ...]:
    out = []
    for r in reversed(radices):
        idx, c = divmod(idx, r)
        out.append(c)
    return tuple(reversed(out))


def _check_cap(size, cap, what):
    cap = max_table() if cap is None else cap
    if size > cap:
        raise CapExceeded(f"{what} would have {size} elements, above the cap {cap}")


def direct_product(parts, cap=None) -> FiniteSemigroup:
    parts = list(parts)
    if not parts:
        raise SemigroupError("direct product needs at least one factor")
    if len(parts) == 1:
        return parts[0]
    radices = [P.n for P in parts]
    _check_cap(prod(radices), cap, "direct product")
    table = parts[0].table.astype(np.int64)
    for P in parts[1:]:
        m = P.n
        n = table.shape[0]
        big = table[:, None, :, None] * m + P.table[None, :, None, :]
        table = big.reshape(n * m, n * m)
    labels = ["(" + ",".join(combo) + ")"
              for combo in product(*[[P.label(x) for x in range(P.n)] for P in parts])]
    return FiniteSemigroup(table, labels, validate=False)


def _fresh_label(taken, preferred=("0", "z")):
    for c in preferred:
        if c not in taken:
            return c
    k = 1
    while f"z{k}" in taken:
        k += 1
    return f"z{k}"


def attach_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    """S plus a new absorbing element at index n."""
    n = S.n
    t = np.full((n + 1, n + 1), n, dtype=np.int32)
    t[:n, :n] = S.table
    labels = [S.label(x) for x in range(n)]
    labels.append(_fresh_label(set(labels)))
    return FiniteSemigroup(t, labels, validate=False)


# ---------------------------------------------------------------- actions

class GroupAction:
    """A homomorphism from a group into Aut(target): one permutation per group element."""

    def __init__(self, group: FiniteSemigroup, target: FiniteSemigroup, perms, validate=True):
        self.group = group
        self.target = target
        self.perms = tuple(tuple(int(v) for v in p) for p in perms)
        if validate:
            self._validate()

    def _validate(self):
        G, S = self.group, self.target
        facts = require_group(G, "acting group")
        if len(self.perms) != G.n:
            raise InvalidAction(f"{len(self.perms)} permutations for a group of order {G.n}")
        sr = S.rows
        for g, p in enumerate(self.perms):
            if sorted(p) != list(range(S.n)):
                raise InvalidAction(f"image of group element {g} is not a permutation", (g,))
            for x in range(S.n):
                for y in range(S.n):
                    if p[sr[x][y]] != sr[p[x]][p[y]]:
                        raise InvalidAction(
                            f"group element {g} does not act by an automorphism "
                            f"(fails on {x}*{y})", (g, x, y))
        if self.perms[facts.identity] != tuple(range(S.n)):
            raise InvalidAction("the identity does not act trivially", (facts.identity,))
        gr = G.rows
        for g in range(G.n):
            for h in range(G.n):
                composed = tuple(self.perms[g][self.perms[h][x]] for x in range(S.n))
                if self.perms[gr[g][h]] != composed:
                    raise InvalidAction(f"not a homomorphism at ({g},{h})", (g, h))

    def act(self, g, x):
        return self.perms[g][x]

    def fixes_idempotents(self) -> bool:
        return all(p[e] == e for p in self.perms for e in self.target.idempotents)

    def serialize(self) -> str:
        return "".join(f"{g}: {' '.join(map(str, p))}\n" for g, p in enumerate(self.perms))

    @classmethod
    def parse(cls, text, group, target):
        from .semigroup import ParseError

        perms = {}
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            head, sep, body = line.partition(":")
            if not sep:
                raise ParseError("expected 'g: p0 p1 ...'", no, 1)
            try:
                g = int(head)
                perms[g] = [int(tok) for tok in body.split()]
            except ValueError:
                raise ParseError("non-integer in action line", no) from None
        if sorted(perms) != list(range(group.n)):
            raise ParseError(f"need one line per group element 0..{group.n - 1}")
        return cls(group, target, [perms[g] for g in range(group.n)])


def trivial_action(G: FiniteSemigroup, S: FiniteSemigroup) -> GroupAction:
    return GroupAction(G, S, [tuple(range(S.n))] * G.n, validate=False)


def cyclic_actions(G: FiniteSemigroup, S: FiniteSemigroup) -> list[GroupAction]:
    """Every action of a cyclic group G (generated by element 1) on S."""
    facts = require_group(G)
    k = G.n
    if k == 1:
        return [trivial_action(G, S)]
    gen = 1
    powers = [facts.identity]
    for _ in range(k - 1):
        powers.append(G.rows[powers[-1]][gen])
    if sorted(powers) != list(range(k)):
        raise SemigroupError("element 1 does not generate the group")
    out = []
    for alpha in isomorphisms(S, S):
        a = alpha.map
        perm_pows = [tuple(range(S.n))]
        for _ in range(k):
            perm_pows.append(tuple(a[v] for v in perm_pows[-1]))
        if perm_pows[k] != tuple(range(S.n)):
            continue
        perms = [None] * k
        for i, g in enumerate(powers):
            perms[g] = perm_pows[i]
        out.append(GroupAction(G, S, perms))
    return out


def semidirect_product(S: FiniteSemigroup, G: FiniteSemigroup, action: GroupAction,
                       validate=True, cap=None) -> FiniteSemigroup:
    """Carrier S x G (index s*|G| + g) with (s,g)(s',g') = (s * g(s'), g g')."""
    if action.group != G or action.target != S:
        raise InvalidAction("action does not match the given semigroup and group")
    n, k = S.n, G.n
    _check_cap(n * k, cap, "semidirect product")
    T = S.table
    P = np.array(action.perms, dtype=np.int64)  # P[g, s'] = g(s')
    s = np.arange(n)[:, None, None, None]
    g = np.arange(k)[None, :, None, None]
    s2 = np.arange(n)[None, None, :, None]
    g2 = np.arange(k)[None, None, None, :]
    first = T[s, P[g, s2]]
    second = G.table[g, g2]
    table = (first * k + second).reshape(n * k, n * k)
    labels = [f"({S.label(a)},{G.label(b)})" for a in range(n) for b in range(k)]
    return FiniteSemigroup(table, labels, validate=validate)


def semidirect_inverse(S, G, action, s, g):
    """(s,g)^-1 = (g^-1(s^-1), g^-1) as a pair."""
    from .semigroup import inverse_of

    gi = require_group(G).inverse[g]
    return action.act(gi, inverse_of(S, s)), gi


def automorphism_group(S: FiniteSemigroup, cap=12) -> tuple[FiniteSemigroup, GroupAction]:
    """Aut(S) as a permutation group (lexicographic order, identity first) with its action."""
    if S.n > cap:
        raise CapExceeded(f"automorphism search capped at {cap} elements, got {S.n}")
    autos = [m.map for m in isomorphisms(S, S)]
    pos = {a: i for i, a in enumerate(autos)}
    table = [[pos[tuple(a[b[x]] for x in range(S.n))] for b in autos] for a in autos]
    labels = ["id"] + [f"a{i}" for i in range(1, len(autos))]
    G = FiniteSemigroup(table, labels, validate=False)
    return G, GroupAction(G, S, autos, validate=False)


def holomorph(S: FiniteSemigroup) -> FiniteSemigroup:
    G, action = automorphism_group(S)
    return semidirect_product(S, G, action)


def brandt(H: FiniteSemigroup, kappa: int, cap=None) -> FiniteSemigroup:
    """B(H, kappa): triples (a, h, b) at index (a*|H| + h)*kappa + b, zero last."""
    require_group(H)
    if kappa < 1:
        raise SemigroupError("kappa must be a positive integer")
    m = H.n
    size = kappa * kappa * m + 1
    _check_cap(size, cap, "Brandt semigroup")
    zero = size - 1
    hr = H.rows
    t = [[zero] * size for _ in range(size)]
    for i in range(zero):
        a, h, b = mixed_radix_coords(i, (kappa, m, kappa))
        for j in range(zero):
            a2, h2, b2 = mixed_radix_coords(j, (kappa, m, kappa))
            if b == a2:
                t[i][j] = mixed_radix((a, hr[h][h2], b2), (kappa, m, kappa))
    labels = [f"({a},{H.label(h)},{b})" for a in range(kappa) for h in range(m)
              for b in range(kappa)]
    labels.append(_fresh_label(set(labels)))
    return FiniteSemigroup(t, labels, validate=False)


def rees_quotient(S: FiniteSemigroup, ideal) -> FiniteSemigroup:
    """Collapse an ideal to a single zero (the last index)."""
    I = set(ideal.elements() if isinstance(ideal, Subset) else ideal)
    if not I or not I <= set(range(S.n)):
        raise SemigroupError("ideal must be a non-empty set of elements")
    r = S.rows
    for s in range(S.n):
        for i in sorted(I):
            if r[s][i] not in I:
                raise NotAnIdeal((s, i))
            if r[i][s] not in I:
                raise NotAnIdeal((i, s))
    keep = [x for x in range(S.n) if x not in I]
    pos = {x: k for k, x in enumerate(keep)}
    zero = len(keep)
    t = [[pos.get(r[a][b], zero) for b in keep] + [zero] for a in keep]
    t.append([zero] * (zero + 1))
    labels = [S.label(x) for x in keep]
    labels.append(_fresh_label(set(labels)))
    return FiniteSemigroup(t, labels, validate=False)


# ---------------------------------------------------------------- embedding maps

def _as_bits(K):
    return K.bits if isinstance(K, Subset) else int(K)


def product_of_subset_tuples(groups, subsets, product_group=None) -> Subset:
    """The box product of one subset per factor, as a subset of the direct product."""
    groups = list(groups)
    subsets = [_as_bits(K) for K in subsets]
    if len(groups) != len(subsets):
        raise SemigroupError("need exactly one subset per factor")
    target = product_group if product_group is not None else direct_product(groups)
    radices = [H.n for H in groups]
    bits = 0
    for coords in product(*[bits_elements(b) for b in subsets]):
        bits |= 1 << mixed_radix(coords, radices)
    return Subset(target, bits)


def box_product_morphism(groups) -> tuple[Morphism, list[PowerSemigroup], PowerSemigroup]:
    """The map prod exp(H_i) -> exp(prod H_i) as a Morphism between materialized tables."""
    groups = list(groups)
    powers = [power_semigroup(H) for H in groups]
    source = direct_product([P.sem for P in powers])
    G = direct_product(groups)
    target = power_semigroup(G)
    radices = [P.sem.n for P in powers]
    mapping = []
    for i in range(source.n):
        coords = mixed_radix_coords(i, radices)
        box = product_of_subset_tuples(groups, [c + 1 for c in coords], G)
        mapping.append(box.bits - 1)
    return Morphism(source, target.sem, mapping), powers, target


def _check_group_inclusion(H, G, inclusion):
    if len(inclusion) != H.n or len(set(inclusion)) != H.n:
        raise SemigroupError("inclusion must be an injective map on the elements of H")
    hr, gr = H.rows, G.rows
    for a in range(H.n):
        for b in range(H.n):
            if inclusion[hr[a][b]] != gr[inclusion[a]][inclusion[b]]:
                raise SemigroupError("inclusion is not a homomorphism")


def zero_embedding(f: SubsetMap, G: FiniteSemigroup, inclusion=None) -> SubsetMap:
    """Extend f: S -> exp(H) to S^0 -> exp(G) by sending the zero to G itself.

    Without ``inclusion`` the map must already land in exp(G); H is then the
    union subgroup of the images, which must be a proper subgroup of G.
    """
    require_group(G)
    if inclusion is None:
        if f.group != G:
            raise SemigroupError("give an inclusion of the image group into G")
        H_bits = union_tighten(f).bits
        images = list(f.images)
    else:
        require_group(f.group)
        _check_group_inclusion(f.group, G, inclusion)
        H_bits = 0
        for x in inclusion:
            H_bits |= 1 << x
        images = []
        for b in f.images:
            nb = 0
            for x in bits_elements(b):
                nb |= 1 << inclusion[x]
            images.append(nb)
    full = (1 << G.n) - 1
    if H_bits == full:
        raise SemigroupError("the image group must be a proper subgroup of G "
                             "(otherwise the zero's image G is already used)")
    ext = SubsetMap(attach_zero(f.source), G, images + [full])
    if not ext.is_embedding():
        raise SemigroupError("extended map is not an injective homomorphism")
    return ext


# ---------------------------------------------------------------- semidirect into exp

def power_group(H: FiniteSemigroup, G: FiniteSemigroup, side="left", cap=None):
    """H^G (coordinates indexed by the elements of G) with G shifting coordinates.

    ``side='left'``: (g.t)_a = t_{g a}; this is an action when G is abelian.
    ``side='right'``: (g.t)_a = t_{a g}; an action for every G.
    """
    require_group(G)
    k = G.n
    HG = direct_product([H] * k, cap=cap)
    radices = [H.n] * k
    gr = G.rows
    perms = []
    for g in range(k):
        src = [gr[g][a] if side == "left" else gr[a][g] for a in range(k)]
        perm = []
        for i in range(HG.n):
            t = mixed_radix_coords(i, radices)
            perm.append(mixed_radix([t[src[a]] for a in range(k)], radices))
        perms.append(perm)
    return HG, GroupAction(G, HG, perms, validate=False)


def equivariant_lift(f: SubsetMap, action: GroupAction) -> list[tuple[int, ...]]:
    """s -> (f(a s))_{a in G}: one image subset of H per coordinate."""
    G = action.group
    return [tuple(f.images[action.act(a, s)] for a in range(G.n)) for s in range(f.source.n)]


def graph_subset(K_bits: int, g: int, group_order: int) -> int:
    """K x {g} inside a semidirect carrier indexed x*|G| + g."""
    out = 0
    for x in bits_elements(K_bits):
        out |= 1 << (x * group_order + g)
    return out


@dataclass
class SemidirectEmbedding:
    source: FiniteSemigroup  # S x| G
    lift: list  # per s: tuple of subsets of H, one per coordinate
    power_group: FiniteSemigroup | None  # H^G
    shift: GroupAction | None
    target_group: FiniteSemigroup | None  # H^G x| G
    images: tuple[int, ...] | None
    homomorphism: bool | None
    injective: bool | None

    @property
    def verified(self):
        return bool(self.homomorphism and self.injective)

    def as_subset_map(self) -> SubsetMap:
        if self.images is None:
            raise SemigroupError("construction valid, verification skipped: target not materialized")
        return SubsetMap(self.source, self.target_group, self.images)

    def symbolic(self):
        """(per-coordinate subsets, g) for every source element (s, g)."""
        k = self.source.n // len(self.lift)
        return [(self.lift[s], g) for s in range(len(self.lift)) for g in range(k)]


def semidirect_hyper_embedding(f: SubsetMap, G: FiniteSemigroup, action: GroupAction,
                               allow_nonabelian=False, side="left",
                               power_cap=4096, cap=None) -> SemidirectEmbedding:
    """Embed S x| G into exp(H^G x| G) from an embedding f: S -> exp(H)."""
    require_group(f.group)
    facts = group_facts(G)
    if facts is None:
        raise SemigroupError("acting semigroup is not a group")
    if action.target != f.source or action.group != G:
        raise InvalidAction("action does not match the embedding's source and G")
    if not allow_nonabelian and not G.is_commutative:
        raise SemigroupError("the acting group must be abelian (pass allow_nonabelian to try anyway)")
    S = f.source
    source = semidirect_product(S, G, action)
    lift = equivariant_lift(f, action)
    H, k = f.group, G.n
    hg_size = H.n ** k
    limit = max_table() if cap is None else cap
    if hg_size > power_cap or hg_size * k > limit:
        return SemidirectEmbedding(source, lift, None, None, None, None, None, None)
    HG, shift = power_group(H, G, side=side, cap=power_cap)
    try:
        shift._validate()
        target = semidirect_product(HG, G, shift, cap=limit)
    except SemigroupError:
        # the coordinate shift is not an action here; no group to embed into
        return SemidirectEmbedding(source, lift, HG, shift, None, None, False, None)
    images = []
    for s in range(S.n):
        box = product_of_subset_tuples([H] * k, lift[s], HG).bits
        for g in range(k):
            images.append(graph_subset(box, g, k))
    fmap = SubsetMap(source, target, images)
    return SemidirectEmbedding(
        source, lift, HG, shift, target, tuple(images),
        fmap.homomorphism_witness() is None, fmap.injectivity_witness() is None)
