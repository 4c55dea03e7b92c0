"""Finite semigroups given by Cayley tables, and the class predicates on them.

Elements are the dense indices ``0..n-1``; labels are display metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import kernels


class SemigroupError(ValueError):
    """Base class for every rejected input in this package."""


class ParseError(SemigroupError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class AssociativityError(SemigroupError):
    def __init__(self, witness):
        i, j, k = witness
        super().__init__(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")
        self.witness = witness


class NotInverseError(SemigroupError):
    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class FiniteSemigroup:
    """A semigroup on ``{0, ..., n-1}`` with ``table[i][j] = i*j``.

    The table is validated (square, entries in range, associative) unless
    ``validate=False`` is passed by a construction that guarantees it.
    """

    def __init__(self, table, labels: Iterable[str] | None = None, validate: bool = True):
        arr = np.array(table, dtype=np.int32, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise SemigroupError(f"table must be square, got shape {arr.shape}")
        if arr.shape[0] == 0:
            raise SemigroupError("empty semigroup")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            i, j = np.argwhere((arr < 0) | (arr >= n))[0]
            raise SemigroupError(f"entry ({i},{j}) = {arr[i, j]} out of range [0,{n})")
        arr.flags.writeable = False
        self.table = arr
        self.n = n
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise SemigroupError(f"{len(labels)} labels for {n} elements")
            if any(not x or any(c.isspace() for c in x) for x in labels):
                raise SemigroupError("labels must be non-empty and whitespace-free")
        self.labels = labels
        if validate:
            witness = kernels.find_nonassociative(arr)
            if witness is not None:
                raise AssociativityError(witness)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteSemigroup(n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return (
            self is other
            or (self.n == other.n and self.labels == other.labels
                and np.array_equal(self.table, other.table))
        )

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash((self.n, self.table.tobytes(), self.labels))

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists (fast scalar lookups)."""
        return self.table.tolist()

    def mul(self, x, y):
        return self.rows[x][y]

    def label(self, x):
        return self.labels[x] if self.labels is not None else str(x)

    def check_associativity(self, samples=None, seed=0):
        """Return the least failing triple, or None.

        With ``samples`` set, only that many random triples are checked.
        """
        if samples is None:
            return kernels.find_nonassociative(self.table)
        rng = np.random.default_rng(seed)
        triples = rng.integers(0, self.n, size=(samples, 3), dtype=np.int32)
        return kernels.sampled_nonassociative(self.table, triples)

    @cached_property
    def idempotents(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(np.diagonal(self.table) == np.arange(self.n))]

    def is_idempotent(self, x):
        return self.rows[x][x] == x

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def _inverse_sets(self) -> list[list[int]]:
        # y is an inverse of x when x*y*x = x and y*x*y = y
        T = self.table
        idx = np.arange(self.n)
        xyx = T[T, idx[:, None]]  # [x, y] -> (x*y)*x
        yxy = T[T.T, idx[None, :]]  # [x, y] -> (y*x)*y
        ok = (xyx == idx[:, None]) & (yxy == idx[None, :])
        return [np.flatnonzero(row).tolist() for row in ok]

    @cached_property
    def inverse_map(self) -> list[int] | None:
        """``inverse_map[x] = x^-1`` if the semigroup is inverse, else None."""
        sets = self._inverse_sets
        if all(len(s) == 1 for s in sets):
            return [s[0] for s in sets]
        return None


@dataclass(frozen=True, eq=False)
class Subset:
    """A non-empty set of elements of ``ground``, stored as a bit pattern."""

    ground: FiniteSemigroup
    bits: int

    def __post_init__(self):
        if self.bits <= 0:
            raise SemigroupError("subsets must be non-empty")
        if self.bits >> self.ground.n:
            raise SemigroupError(f"subset has elements outside the ground of size {self.ground.n}")

    @classmethod
    def of(cls, ground, elements):
        bits = 0
        for x in elements:
            if not 0 <= x < ground.n:
                raise SemigroupError(f"element {x} out of range [0,{ground.n})")
            bits |= 1 << x
        return cls(ground, bits)

    @property
    def index(self):
        """Position in the canonical enumeration of non-empty subsets."""
        return self.bits - 1

    def elements(self) -> list[int]:
        return [i for i in range(self.bits.bit_length()) if self.bits >> i & 1]

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, x):
        return x >= 0 and bool(self.bits >> x & 1)

    def __eq__(self, other):
        if not isinstance(other, Subset):
            return NotImplemented
        return self.bits == other.bits and self.ground == other.ground

    def __hash__(self):
        return hash((self.bits, self.ground))

    def __lt__(self, other):
        return self.bits < other.bits

    def __str__(self):
        return "{" + ",".join(map(str, self.elements())) + "}"

    def __repr__(self):
        return f"Subset({self})"


def parse_subset_text(text: str) -> list[int]:
    """Parse ``{i1,i2,...}`` with strictly increasing indices."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ParseError(f"subset must look like {{i,j,...}}: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ParseError("subsets must be non-empty")
    try:
        items = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ParseError(f"bad subset element in {text!r}") from None
    if any(b <= a for a, b in zip(items, items[1:])) or items[0] < 0:
        raise ParseError(f"subset indices must be strictly increasing and >= 0: {text!r}")
    return items


# ---------------------------------------------------------------- file format

def parse_semigroup(text: str) -> FiniteSemigroup:
    """Read the Cayley-table text format."""
    lines = [(no, raw) for no, raw in enumerate(text.splitlines(), start=1)
             if raw.strip() and not raw.lstrip().startswith("#")]
    if not lines:
        raise ParseError("no element count found")
    no, raw = lines[0]
    try:
        n = int(raw.strip())
    except ValueError:
        raise ParseError(f"expected element count, got {raw.strip()!r}", no, 1) from None
    if n <= 0:
        raise ParseError("element count must be positive", no, 1)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows, found {len(lines) - 1}", lines[-1][0])
    table = []
    for no, raw in lines[1:n + 1]:
        row = []
        for col, tok in _tokens(raw):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", no, col) from None
            if not 0 <= v < n:
                raise ParseError(f"entry {v} out of range [0,{n})", no, col)
            row.append(v)
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", no)
        table.append(row)
    labels = None
    rest = lines[n + 1:]
    if rest:
        no, raw = rest[0]
        if len(rest) > 1 or not raw.strip().startswith("names:"):
            raise ParseError(f"unexpected content {raw.strip()!r}", no, 1)
        labels = raw.strip()[len("names:"):].split()
        if len(labels) != n:
            raise ParseError(f"{len(labels)} names for {n} elements", no)
    return FiniteSemigroup(table, labels)


def _tokens(line):
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        yield col + 1, tok
        col += len(tok)


def serialize(S: FiniteSemigroup, comment: str | None = None) -> str:
    out = []
    if comment is not None:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(str(S.n))
    out.extend(" ".join(map(str, row)) for row in S.rows)
    if S.labels is not None:
        out.append("names: " + " ".join(S.labels))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- predicates

@dataclass(frozen=True)
class GroupFacts:
    identity: int
    inverse: tuple[int, ...]


def group_facts(S: FiniteSemigroup) -> GroupFacts | None:
    T = S.table
    idx = np.arange(S.n)
    ids = [e for e in range(S.n) if np.array_equal(T[e], idx) and np.array_equal(T[:, e], idx)]
    if not ids:
        return None
    e = ids[0]
    inv = []
    for x in range(S.n):
        ys = np.flatnonzero((T[x] == e) & (T[:, x] == e))
        if ys.size == 0:
            return None
        inv.append(int(ys[0]))
    return GroupFacts(e, tuple(inv))


def is_group(S: FiniteSemigroup) -> bool:
    return group_facts(S) is not None


def require_group(S: FiniteSemigroup, what="input") -> GroupFacts:
    facts = group_facts(S)
    if facts is None:
        raise SemigroupError(f"{what} is not a group")
    return facts


@dataclass(frozen=True)
class ClassFlags:
    commutative: bool
    group: bool
    semilattice: bool
    regular: bool
    inverse: bool
    clifford: bool

    def as_line(self):
        return " ".join(f"{k}={'yes' if v else 'no'}" for k, v in self.__dict__.items())


def is_regular(S):
    T = S.table
    idx = np.arange(S.n)
    return bool(np.all(np.any(T[T, idx[:, None]] == idx[:, None], axis=1)))


def idempotents_commute(S):
    E = S.idempotents
    sub = S.table[np.ix_(E, E)]
    return bool(np.array_equal(sub, sub.T))


def idempotent_power(S, x):
    """The unique idempotent in the cyclic subsemigroup generated by ``x``."""
    seen = []
    y = x
    while y not in seen:
        seen.append(y)
        y = S.rows[y][x]
    start = seen.index(y)
    for z in seen[start:]:
        if S.rows[z][z] == z:
            return z
    raise AssertionError("cyclic subsemigroup without idempotent")


def _in_maximal_subgroup(S, x, e):
    r = S.rows
    if r[x][e] != x or r[e][x] != x:
        return False
    return any(r[x][y] == e and r[y][x] == e for y in range(S.n))


def is_clifford(S):
    return all(_in_maximal_subgroup(S, x, idempotent_power(S, x)) for x in range(S.n))


def class_flags(S: FiniteSemigroup) -> ClassFlags:
    commutative = S.is_commutative
    semilattice = commutative and len(S.idempotents) == S.n
    regular = is_regular(S)
    inverse = regular and idempotents_commute(S)
    return ClassFlags(
        commutative=commutative,
        group=is_group(S),
        semilattice=semilattice,
        regular=regular,
        inverse=inverse,
        clifford=is_clifford(S),
    )


def regular_witnesses(S: FiniteSemigroup, x: int) -> frozenset[int]:
    r = S.rows
    return frozenset(y for y in range(S.n) if r[r[x][y]][x] == x)


def _not_inverse_witness(S):
    for x, ys in enumerate(S._inverse_sets):
        if len(ys) != 1:
            return x, ys
    return None


def inverse_of(S: FiniteSemigroup, x: int) -> int:
    inv = S.inverse_map
    if inv is None:
        y, ys = _not_inverse_witness(S)
        if not ys:
            raise NotInverseError(f"not an inverse semigroup: element {y} has no inverse", (y,))
        raise NotInverseError(
            f"not an inverse semigroup: element {y} has inverses {ys[0]} and {ys[1]}",
            (y, ys[0], ys[1]))
    return inv[x]


def maximal_subgroup(S: FiniteSemigroup, e: int) -> Subset:
    if not S.is_idempotent(e):
        raise SemigroupError(f"element {e} is not idempotent")
    return Subset.of(S, [x for x in range(S.n) if _in_maximal_subgroup(S, x, e)])


def restrict(S: FiniteSemigroup, elements, first=None) -> tuple[FiniteSemigroup, list[int]]:
    """The subsemigroup on ``elements`` with its own dense indexing.

    ``first`` (if given) is placed at index 0; the rest keep ascending order.
    Returns the semigroup and the list mapping new indices to old ones.
    """
    elems = sorted(elements)
    if first is not None:
        elems.remove(first)
        elems.insert(0, first)
    pos = {x: i for i, x in enumerate(elems)}
    try:
        table = [[pos[S.rows[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise SemigroupError("subset is not closed under the product") from None
    labels = [S.label(x) for x in elems] if S.labels is not None else None
    return FiniteSemigroup(table, labels, validate=False), elems


@dataclass(frozen=True)
class IdempotentPoset:
    semigroup: FiniteSemigroup
    idempotents: tuple[int, ...]
    leq: frozenset[tuple[int, int]]

    def up(self, e) -> list[int]:
        """The principal filter of ``e``: idempotents f with e*f = e."""
        return [f for f in self.idempotents if (e, f) in self.leq]

    def down(self, e) -> list[int]:
        return [f for f in self.idempotents if (f, e) in self.leq]

    def is_partial_order(self):
        E = self.idempotents
        le = self.leq
        return (all((e, e) in le for e in E)
                and all(not ((a, b) in le and (b, a) in le) or a == b for a in E for b in E)
                and all((a, c) in le for a in E for b in E for c in E
                        if (a, b) in le and (b, c) in le))


def idempotent_poset(S: FiniteSemigroup) -> IdempotentPoset:
    E = S.idempotents
    r = S.rows
    leq = frozenset((e, f) for e in E for f in E if r[e][f] == e)
    return IdempotentPoset(S, tuple(E), leq)


def incomparable(poset: IdempotentPoset, e: int, f: int) -> bool:
    ef = poset.semigroup.rows[e][f]
    return ef != e and ef != f


def conjugated(S: FiniteSemigroup, x: int, y: int) -> bool:
    return conjugator(S, x, y) is not None


def conjugator(S: FiniteSemigroup, x: int, y: int) -> int | None:
    """Least z with x = z*y*z^-1 and y = z^-1*x*z, or None."""
    inverse_of(S, 0)  # raises on non-inverse input
    inv = S.inverse_map
    r = S.rows
    for z in range(S.n):
        zi = inv[z]
        if r[r[z][y]][zi] == x and r[r[zi][x]][z] == y:
            return z
    return None


# ---------------------------------------------------------------- obstructions

@dataclass(frozen=True)
class Violation:
    kind: str  # 'not-inverse' | 'idempotent-test' | 'conjugate-comparable'
    witness: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ObstructionReport:
    applicable: bool
    violations: tuple[Violation, ...] = ()

    @property
    def clean(self):
        return self.applicable and not self.violations


def class_h_obstructions(S: FiniteSemigroup) -> ObstructionReport:
    """Necessary conditions for a regular semigroup to embed in some exp(G).

    An empty report is not a proof of embeddability.
    """
    if not is_regular(S):
        return ObstructionReport(applicable=False)
    r = S.rows
    if S.inverse_map is None:
        E = S.idempotents
        for e in E:
            for f in E:
                if r[e][f] != r[f][e]:
                    return ObstructionReport(True, (Violation(
                        "not-inverse", (e, f),
                        f"idempotents {S.label(e)} and {S.label(f)} do not commute"),))
        x, ys = _not_inverse_witness(S)
        return ObstructionReport(True, (Violation(
            "not-inverse", (x, *ys[:2]), f"element {S.label(x)} has several inverses"),))

    inv = S.inverse_map
    found = []
    for x in range(S.n):
        if r[x][x] == x:
            continue
        t = r[r[x][x]][inv[x]]
        if r[t][t] == t:
            found.append(Violation(
                "idempotent-test", (x,),
                f"x={S.label(x)} is not idempotent but x*x*x^-1={S.label(t)} is"))
            break
    E = S.idempotents
    for i, e in enumerate(E):
        hit = None
        for f in E[i + 1:]:
            ef = r[e][f]
            if (ef == e or ef == f) and conjugator(S, e, f) is not None:
                hit = f
                break
        if hit is not None:
            z = conjugator(S, e, hit)
            found.append(Violation(
                "conjugate-comparable", (e, hit, z),
                f"idempotents {S.label(e)} and {S.label(hit)} are comparable "
                f"and conjugated by {S.label(z)}"))
            break
    return ObstructionReport(True, tuple(found))
