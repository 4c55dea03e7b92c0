from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels
from .semigroup import FiniteSemigroup, SemigroupError


class Morphism:
    """A map between two finite semigroups, with cached property flags."""

    def __init__(self, source: FiniteSemigroup, target: FiniteSemigroup, mapping):
        m = tuple(int(v) for v in mapping)
        if len(m) != source.n:
            raise SemigroupError(f"map has {len(m)} entries for {source.n} source elements")
        if any(not 0 <= v < target.n for v in m):
            raise SemigroupError("map value out of target range")
        self.source = source
        self.target = target
        self.map = m

    def __call__(self, x):
        return self.map[x]

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.map == other.map and self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"Morphism({list(self.map)})"

    @cached_property
    def homomorphism_witness(self) -> tuple[int, int] | None:
        """Least pair (x, y) with map[x*y] != map[x]*map[y]."""
        return kernels.find_nonhomomorphic(
            self.source.table, self.target.table, np.array(self.map, dtype=np.int32))

    @cached_property
    def is_homomorphism(self) -> bool:
        return self.homomorphism_witness is None

    @cached_property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    @property
    def is_embedding(self):
        return self.is_homomorphism and self.is_injective

    @property
    def is_isomorphism(self):
        return self.is_embedding and self.is_surjective

    def compose(self, after: Morphism) -> Morphism:
        """``after`` applied after ``self``."""
        return Morphism(self.source, after.target, [after.map[v] for v in self.map])
