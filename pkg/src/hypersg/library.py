"""Named small groups and semigroups used throughout the tests and the corpus."""

from __future__ import annotations

from itertools import permutations, product

from .semigroup import FiniteSemigroup, SemigroupError


def cyclic(n: int) -> FiniteSemigroup:
    """Z_n written additively; the trivial group's only element is labelled 'e'."""
    if n < 1:
        raise SemigroupError("cyclic group order must be positive")
    labels = ["e"] if n == 1 else [str(i) for i in range(n)]
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)], labels,
                           validate=False)


def trivial() -> FiniteSemigroup:
    return cyclic(1)


def klein() -> FiniteSemigroup:
    # coordinates (a, b) with index 2a + b
    t = [[a ^ b for b in range(4)] for a in range(4)]
    return FiniteSemigroup(t, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"], validate=False)


def symmetric(k: int) -> FiniteSemigroup:
    """S_k on permutations in lexicographic order; (p*q)(i) = p(q(i))."""
    perms = list(permutations(range(k)))
    pos = {p: i for i, p in enumerate(perms)}
    t = [[pos[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return FiniteSemigroup(t, labels, validate=False)


def two_chain() -> FiniteSemigroup:
    """{f < e}: f = 0, e = 1, product = min."""
    return FiniteSemigroup([[0, 0], [0, 1]], ["f", "e"], validate=False)


def chain(n: int) -> FiniteSemigroup:
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)], validate=False)


def e3() -> FiniteSemigroup:
    """The semilattice {e, f, ef}: e = 0, f = 1, ef = 2 (the bottom)."""
    t = [[0, 2, 2], [2, 1, 2], [2, 2, 2]]
    return FiniteSemigroup(t, ["e", "f", "ef"], validate=False)


def left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup([[i] * n for i in range(n)], validate=False)


def small_groups(max_order: int = 6) -> list[tuple[str, FiniteSemigroup]]:
    """One representative per isomorphism type of group of order <= max_order (max 7)."""
    if max_order > 7:
        raise SemigroupError("small_groups only knows orders up to 7")
    out = []
    for n in range(1, max_order + 1):
        out.append((f"Z{n}", cyclic(n)))
        if n == 4:
            out.append(("Z2xZ2", klein()))
        if n == 6:
            out.append(("S3", symmetric(3)))
    return out


def semilattices(n: int) -> list[FiniteSemigroup]:
    """All semilattices with n elements up to isomorphism (brute force, n <= 5)."""
    from .search import is_isomorphic

    if n > 5:
        raise SemigroupError("semilattice enumeration is limited to n <= 5")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    found: list[FiniteSemigroup] = []
    for values in product(range(n), repeat=len(pairs)):
        t = [[i if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(pairs, values):
            t[i][j] = t[j][i] = v
        if not _associative(t, n):
            continue
        S = FiniteSemigroup(t, validate=False)
        if not any(is_isomorphic(S, T) is not None for T in found):
            found.append(S)
    return found


def _associative(t, n):
    return all(t[t[i][j]][k] == t[i][t[j][k]] for i in range(n) for j in range(n) for k in range(n))
