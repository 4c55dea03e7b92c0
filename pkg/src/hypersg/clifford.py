"""Embedding a finite Clifford inverse semigroup S into exp(prod of groups).

Pipeline: S -> prod_e H_e^0 (diagonal of the component maps), then each
factor H_e^0 -> exp(H~_e) (group elements to singletons, the zero to the
whole padded group), then the box product into exp(prod_e H~_e).  Factors
follow ascending idempotent index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import prod

from .constructions import attach_zero, direct_product, mixed_radix
from .hyperspace import SubsetMap, bits_elements, max_table, product_bits, union_tighten
from .library import cyclic
from .morphism import Morphism
from .semigroup import (
    FiniteSemigroup,
    ParseError,
    SemigroupError,
    Subset,
    class_flags,
    idempotent_poset,
    maximal_subgroup,
    parse_subset_text,
    restrict,
)

DEFAULT_TARGET_CAP = 1 << 20


class NotCliffordInverse(SemigroupError):
    def __init__(self, failing):
        super().__init__("not a Clifford inverse semigroup: " + ", ".join(f"{k}=no" for k in failing))
        self.failing = tuple(failing)


@dataclass(frozen=True)
class CliffordDecomposition:
    semigroup: FiniteSemigroup
    E: tuple[int, ...]
    pi: tuple[int, ...]  # pi[x] = x x^-1 = x^-1 x
    groups: dict  # e -> Subset H_e
    filters: dict  # e -> tuple of idempotents f with e f = e
    E0: tuple[int, ...]  # all of E: every filter is open in a finite (discrete) semilattice

    def group_of(self, e) -> tuple[FiniteSemigroup, list[int]]:
        """H_e as a standalone group with e at index 0; returns (group, new->old)."""
        return restrict(self.semigroup, self.groups[e].elements(), first=e)


def clifford_decompose(S: FiniteSemigroup) -> CliffordDecomposition:
    flags = class_flags(S)
    failing = [k for k in ("inverse", "clifford") if not getattr(flags, k)]
    if failing:
        raise NotCliffordInverse(failing)
    inv = S.inverse_map
    r = S.rows
    pi = tuple(r[x][inv[x]] for x in range(S.n))
    poset = idempotent_poset(S)
    E = poset.idempotents
    return CliffordDecomposition(
        semigroup=S,
        E=E,
        pi=pi,
        groups={e: maximal_subgroup(S, e) for e in E},
        filters={e: tuple(poset.up(e)) for e in E},
        E0=E,
    )


def component_hom(dec: CliffordDecomposition, e: int, s: int) -> int | None:
    """e*s (an element of H_e) when pi(s) lies above e, else None for the adjoined zero."""
    if dec.pi[s] in dec.filters[e]:
        return dec.semigroup.rows[e][s]
    return None


def diagonal_images(dec: CliffordDecomposition) -> list[tuple[int | None, ...]]:
    return [tuple(component_hom(dec, e, s) for e in dec.E) for s in range(dec.semigroup.n)]


def diagonal_embedding(dec: CliffordDecomposition, cap=None) -> Morphism:
    """S -> prod_e H_e^0 as a verified Morphism (each H_e^0 indexed with e first, zero last)."""
    factors = []
    positions = []
    for e in dec.E:
        H, elems = dec.group_of(e)
        factors.append(attach_zero(H))
        positions.append({x: i for i, x in enumerate(elems)})
    radices = [F.n for F in factors]
    target = direct_product(factors, cap=cap)
    mapping = []
    for tup in diagonal_images(dec):
        coords = [F.n - 1 if v is None else pos[v] for v, F, pos in zip(tup, factors, positions)]
        mapping.append(mixed_radix(coords, radices))
    mor = Morphism(dec.semigroup, target, mapping)
    if not mor.is_injective:
        a, b = _first_collision(mapping)
        raise AssertionError(f"diagonal map identifies {a} and {b}")
    if not mor.is_homomorphism:
        raise AssertionError(f"diagonal map is not a homomorphism at {mor.homomorphism_witness}")
    return mor


def _first_collision(mapping):
    seen = {}
    for x, v in enumerate(mapping):
        if v in seen:
            return seen[v], x
        seen[v] = x
    return None


def separating_idempotent(dec: CliffordDecomposition, x: int, y: int) -> int | None:
    """An idempotent e whose component map tells x and y apart, found exhaustively.

    When pi(x) != pi(y) one side maps to the zero; otherwise e*x != e*y.
    """
    for e in dec.E:
        if component_hom(dec, e, x) != component_hom(dec, e, y):
            return e
    return None


@dataclass(frozen=True)
class Factor:
    idempotent: int
    group: FiniteSemigroup  # the padded group H~_e
    padded: bool
    embed: dict  # element of H_e (index in S) -> index in the padded group

    @property
    def descriptor(self):
        if self.padded:
            return f"Z{self.group.n}"
        return "sub{" + ",".join(map(str, sorted(self.embed))) + "}"


def pad_groups(dec: CliffordDecomposition) -> list[Factor]:
    """H~_e = H_e when non-trivial, else the 2-element group."""
    out = []
    for e in dec.E:
        H, elems = dec.group_of(e)
        if H.n >= 2:
            out.append(Factor(e, H, False, {x: i for i, x in enumerate(elems)}))
        else:
            out.append(Factor(e, cyclic(2), True, {e: 0}))
    return out


def singleton_embedding(factor: Factor, v: int | None) -> int:
    """Bit pattern over H~_e: {v} for group elements, all of H~_e for the zero (None)."""
    if v is None:
        return (1 << factor.group.n) - 1
    return 1 << factor.embed[v]


@dataclass
class EmbeddingCertificate:
    source: FiniteSemigroup
    factors: list[Factor]
    boxes: list[tuple[int, ...]]  # per source element, one bit pattern per factor
    trace: list[tuple[int | None, ...]] = field(default_factory=list)
    homomorphism: bool = False
    injective: bool = False
    materialized: bool = True

    @property
    def target_order(self):
        return prod(f.group.n for f in self.factors)

    @property
    def radices(self):
        return [f.group.n for f in self.factors]

    def target_group(self, cap=None) -> FiniteSemigroup:
        return direct_product([f.group for f in self.factors], cap=cap)

    def image_indices(self, x) -> list[int]:
        radices = self.radices
        return sorted(mixed_radix(c, radices)
                      for c in product(*[bits_elements(b) for b in self.boxes[x]]))

    def image_bits(self, x) -> int:
        out = 0
        for i in self.image_indices(x):
            out |= 1 << i
        return out

    def as_subset_map(self, cap=None) -> SubsetMap:
        G = self.target_group(cap=cap)
        return SubsetMap(self.source, G, [self.image_bits(x) for x in range(self.source.n)])

    @property
    def verified(self):
        return self.homomorphism and self.injective


def _verify_factorwise(source, factors, boxes):
    """Box products multiply coordinatewise, so checking each factor suffices."""
    r = source.rows
    hom = None
    for x in range(source.n):
        for y in range(source.n):
            xy = r[x][y]
            if any(product_bits(f.group, boxes[x][k], boxes[y][k]) != boxes[xy][k]
                   for k, f in enumerate(factors)):
                hom = (x, y)
                break
        if hom:
            break
    inj = None
    seen = {}
    for x, b in enumerate(boxes):
        if b in seen:
            inj = (seen[b], x)
            break
        seen[b] = x
    return hom, inj


def embed_clifford(S: FiniteSemigroup, target_cap: int = DEFAULT_TARGET_CAP) -> EmbeddingCertificate:
    dec = clifford_decompose(S)
    factors = pad_groups(dec)
    trace = diagonal_images(dec)
    boxes = [tuple(singleton_embedding(f, v) for f, v in zip(factors, tup)) for tup in trace]
    cert = EmbeddingCertificate(S, factors, boxes, trace)
    table_cap = max_table()
    cert.materialized = cert.target_order <= min(target_cap, table_cap)
    if cert.materialized:
        fmap = cert.as_subset_map(cap=table_cap)
        cert.homomorphism = fmap.homomorphism_witness() is None
        cert.injective = fmap.injectivity_witness() is None
    else:
        hom, inj = _verify_factorwise(S, factors, boxes)
        cert.homomorphism, cert.injective = hom is None, inj is None
    if not cert.verified:
        raise AssertionError("constructed certificate failed verification")
    return cert


@dataclass(frozen=True)
class VerificationReport:
    homomorphism: bool
    injective: bool
    witness: tuple | None
    tightened: Subset | None
    mode: str  # 'materialized' or 'factorwise'

    @property
    def passed(self):
        return self.homomorphism and self.injective


def verify_certificate(cert: EmbeddingCertificate) -> VerificationReport:
    """Recompute homomorphism and injectivity from the images alone."""
    if cert.target_order <= max_table():
        fmap = cert.as_subset_map()
        hom = fmap.homomorphism_witness()
        inj = fmap.injectivity_witness()
        tight = None
        if hom is None and inj is None:
            tight = union_tighten(fmap)
        return VerificationReport(hom is None, inj is None, hom or inj, tight, "materialized")
    hom, inj = _verify_factorwise(cert.source, cert.factors, cert.boxes)
    return VerificationReport(hom is None, inj is None, hom or inj, None, "factorwise")


# ---------------------------------------------------------------- file format

HEADER = "embedding-certificate v1"


def write_certificate(cert: EmbeddingCertificate) -> str:
    out = [HEADER, f"source: {cert.source.n}", "target: product"]
    for f in cert.factors:
        out.append(f"factor e={f.idempotent} group={f.descriptor} padded={'yes' if f.padded else 'no'}")
    out.append("map:")
    for x in range(cert.source.n):
        out.append(f"{x} -> {{{','.join(map(str, cert.image_indices(x)))}}}")
    yn = {True: "yes", False: "no"}
    out.append(f"verified: homomorphism={yn[cert.homomorphism]} injective={yn[cert.injective]}")
    return "\n".join(out) + "\n"


def _factor_from_descriptor(S, e, desc, padded, no):
    if desc.startswith("Z") and desc[1:].isdigit():
        G = cyclic(int(desc[1:]))
        return Factor(e, G, padded, {e: 0})
    if desc.startswith("sub{"):
        elems = parse_subset_text(desc[3:])
        if any(x >= S.n for x in elems) or e not in elems:
            raise ParseError(f"subgroup {desc} does not fit the source", no)
        G, order = restrict(S, elems, first=e)
        return Factor(e, G, padded, {x: i for i, x in enumerate(order)})
    raise ParseError(f"unknown group descriptor {desc!r}", no)


def read_certificate(text: str, source: FiniteSemigroup) -> EmbeddingCertificate:
    """Parse a certificate; the stored ``verified`` footer is kept but never trusted."""
    lines = [(no, raw.strip()) for no, raw in enumerate(text.splitlines(), start=1) if raw.strip()]
    it = iter(lines)

    def expect(prefix):
        try:
            no, line = next(it)
        except StopIteration:
            raise ParseError(f"missing {prefix!r}") from None
        if not line.startswith(prefix):
            raise ParseError(f"expected {prefix!r}, got {line!r}", no, 1)
        return no, line[len(prefix):].strip()

    expect(HEADER)
    no, n_text = expect("source:")
    if not n_text.isdigit() or int(n_text) != source.n:
        raise ParseError(f"certificate source has {n_text} elements, semigroup has {source.n}", no)
    expect("target: product")
    factors = []
    no, line = next(it, (None, ""))
    while line.startswith("factor "):
        fields = dict(tok.split("=", 1) for tok in line.split()[1:])
        try:
            e = int(fields["e"])
            f = _factor_from_descriptor(source, e, fields["group"], fields["padded"] == "yes", no)
        except (KeyError, ValueError):
            raise ParseError(f"bad factor line {line!r}", no) from None
        factors.append(f)
        no, line = next(it, (None, ""))
    if line != "map:":
        raise ParseError(f"expected 'map:', got {line!r}", no)
    radices = [f.group.n for f in factors]
    size = prod(radices)
    images = {}
    for _ in range(source.n):
        no, line = next(it, (None, ""))
        left, sep, right = line.partition("->")
        if not sep:
            raise ParseError(f"expected 'i -> {{...}}', got {line!r}", no)
        idx = parse_subset_text(right)
        if idx[-1] >= size:
            raise ParseError("target index out of range", no)
        images[int(left)] = idx
    if sorted(images) != list(range(source.n)):
        raise ParseError("map must list every source element once")
    no, footer = next(it, (None, ""))
    if not footer.startswith("verified:"):
        raise ParseError("missing 'verified:' footer", no)
    boxes = [_split_box(images[x], radices, no) for x in range(source.n)]
    return EmbeddingCertificate(source, factors, boxes)


def _split_box(indices, radices, no):
    """Recover per-factor subsets from a listed image; it must be a box product."""
    from .constructions import mixed_radix_coords

    coords = [mixed_radix_coords(i, radices) for i in indices]
    box = []
    for k in range(len(radices)):
        b = 0
        for c in coords:
            b |= 1 << c[k]
        box.append(b)
    if prod(b.bit_count() for b in box) != len(indices):
        raise ParseError("image is not a product of per-factor subsets", no)
    return tuple(box)
