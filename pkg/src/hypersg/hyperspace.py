"""The power semigroup exp(G) of a finite group and the coset description of its elements."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .morphism import Morphism
from .semigroup import (
    FiniteSemigroup,
    GroupFacts,
    SemigroupError,
    Subset,
    require_group,
)

DEFAULT_MAX_TABLE = 4096


class CapExceeded(SemigroupError):
    pass


def max_table(default=DEFAULT_MAX_TABLE) -> int:
    """Largest number of elements a materialized table may have (``HSG_MAX_TABLE``)."""
    raw = os.environ.get("HSG_MAX_TABLE")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SemigroupError(f"HSG_MAX_TABLE must be an integer, got {raw!r}") from None


def bits_elements(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def product_bits(G: FiniteSemigroup, a: int, b: int) -> int:
    rows = G.rows
    bs = bits_elements(b)
    res = 0
    for x in bits_elements(a):
        row = rows[x]
        for y in bs:
            res |= 1 << row[y]
    return res


def subset_product(A: Subset, B: Subset) -> Subset:
    if A.ground is not B.ground and A.ground != B.ground:
        raise SemigroupError("subsets live over different ground semigroups")
    return Subset(A.ground, product_bits(A.ground, A.bits, B.bits))


def inverse_bits(facts: GroupFacts, bits: int) -> int:
    res = 0
    for x in bits_elements(bits):
        res |= 1 << facts.inverse[x]
    return res


def is_subgroup_bits(G: FiniteSemigroup, bits: int) -> bool:
    # finite: non-empty and closed under the product
    return bits != 0 and product_bits(G, bits, bits) == bits


@dataclass(frozen=True, eq=False)
class PowerSemigroup:
    """exp(G): element ``i`` of ``sem`` is the subset with bit pattern ``i + 1``."""

    base: FiniteSemigroup
    facts: GroupFacts
    sem: FiniteSemigroup

    def subset(self, i: int) -> Subset:
        return Subset(self.base, i + 1)

    def index_of(self, K: Subset) -> int:
        if K.ground != self.base:
            raise SemigroupError("subset is not over this group")
        return K.bits - 1

    def __len__(self):
        return self.sem.n


def power_semigroup(G: FiniteSemigroup, cap: int | None = None) -> PowerSemigroup:
    """Build the full Cayley table of exp(G).

    ``cap`` bounds the number of elements 2^|G| - 1; the default comes from
    :func:`max_table` and admits |G| <= 12.
    """
    facts = require_group(G)
    cap = max_table() if cap is None else cap
    size = (1 << G.n) - 1
    if size > cap:
        raise CapExceeded(
            f"exp of a group of order {G.n} has {size} elements, above the cap {cap}; "
            "use subset_product on demand instead (or raise HSG_MAX_TABLE)")
    table = kernels.power_table(G.table)
    labels = ["{" + ",".join(map(str, bits_elements(m))) + "}" for m in range(1, size + 1)]
    return PowerSemigroup(G, facts, FiniteSemigroup(table, labels, validate=False))


def subgroups(G: FiniteSemigroup) -> list[Subset]:
    """All subgroups of G in canonical order, by closure tests on subsets of divisor size."""
    facts = require_group(G)
    n = G.n
    e = facts.identity
    rest = [x for x in range(n) if x != e]
    found = []
    for d in range(1, n + 1):
        if n % d:
            continue
        for combo in combinations(rest, d - 1):
            bits = 1 << e
            for x in combo:
                bits |= 1 << x
            if is_subgroup_bits(G, bits):
                found.append(bits)
    return [Subset(G, b) for b in sorted(found)]


@dataclass(frozen=True)
class SubsetClassification:
    is_idempotent: bool
    coset: tuple[Subset, int] | None  # (H, x) with K = Hx
    is_group_element: bool
    unique_inverse: Subset | None

    @property
    def is_regular(self):
        return self.coset is not None


def classify_subset(G: FiniteSemigroup, K: Subset) -> SubsetClassification:
    """Decide idempotent / regular / group-element status of K in exp(G) via cosets."""
    facts = require_group(G)
    if K.ground != G:
        raise SemigroupError("subset is not over this group")
    rows = G.rows
    elems = K.elements()
    h_bits = 0
    for a in elems:
        for b in elems:
            h_bits |= 1 << rows[a][facts.inverse[b]]
    if h_bits.bit_count() != len(elems) or not is_subgroup_bits(G, h_bits):
        return SubsetClassification(False, None, False, None)
    idem = h_bits == K.bits
    x = facts.identity if idem else elems[0]
    hx = product_bits(G, h_bits, 1 << x)
    if hx != K.bits:
        raise AssertionError(f"coset check failed for {K}")
    xh = product_bits(G, 1 << x, h_bits)
    inv = product_bits(G, 1 << facts.inverse[x], h_bits)
    return SubsetClassification(
        is_idempotent=idem,
        coset=(Subset(G, h_bits), x),
        is_group_element=xh == hx,
        unique_inverse=Subset(G, inv),
    )


def regular_oracle(P: PowerSemigroup, K: Subset) -> bool:
    """Brute force: is there a non-empty A with KAK = K?"""
    k = P.index_of(K)
    T = P.sem.table
    return bool(np.any(T[T[k, :], k] == k))


class SubsetMap:
    """A map from a finite semigroup into exp(group), images as bit patterns.

    Unlike :class:`Morphism`, the target exp(group) is never materialized:
    products are taken setwise on demand.
    """

    def __init__(self, source: FiniteSemigroup, group: FiniteSemigroup, images):
        imgs = tuple(int(b) for b in images)
        if len(imgs) != source.n:
            raise SemigroupError(f"{len(imgs)} images for {source.n} source elements")
        limit = 1 << group.n
        if any(b <= 0 or b >= limit for b in imgs):
            raise SemigroupError("images must be non-empty subsets of the group")
        self.source = source
        self.group = group
        self.images = imgs

    @classmethod
    def from_morphism(cls, m: Morphism, P: PowerSemigroup) -> SubsetMap:
        if m.target != P.sem:
            raise SemigroupError("morphism does not land in this power semigroup")
        return cls(m.source, P.base, [v + 1 for v in m.map])

    def image(self, x) -> Subset:
        return Subset(self.group, self.images[x])

    def homomorphism_witness(self) -> tuple[int, int] | None:
        r = self.source.rows
        img = self.images
        for x in range(self.source.n):
            for y in range(self.source.n):
                if img[r[x][y]] != product_bits(self.group, img[x], img[y]):
                    return (x, y)
        return None

    def injectivity_witness(self) -> tuple[int, int] | None:
        seen = {}
        for x, b in enumerate(self.images):
            if b in seen:
                return (seen[b], x)
            seen[b] = x
        return None

    def is_embedding(self) -> bool:
        return self.injectivity_witness() is None and self.homomorphism_witness() is None


def union_tighten(cert) -> Subset:
    """The union of all images, checked to be a subgroup containing every image.

    ``cert`` is a :class:`SubsetMap` or anything with ``as_subset_map()``.
    """
    fmap = cert if isinstance(cert, SubsetMap) else cert.as_subset_map()
    union = 0
    for b in fmap.images:
        union |= b
    if not is_subgroup_bits(fmap.group, union):
        raise SemigroupError("union of the images is not closed under the product; "
                             "the map is not a homomorphism")
    return Subset(fmap.group, union)
