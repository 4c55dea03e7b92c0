"""Definition-level brute force, written against plain lists and Python sets.

Nothing here imports the package, so these stay independent of the code paths
they check.
"""

from itertools import chain, combinations, product


def nonempty_subsets(n):
    return [frozenset(c) for c in chain.from_iterable(combinations(range(n), k) for k in range(1, n + 1))]


def associative(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def first_nonassociative(t):
    n = len(t)
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return (a, b, c)
    return None


def all_semigroups(n):
    """Every associative table on n labelled elements."""
    out = []
    for flat in product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if associative(t):
            out.append(t)
    return out


def setprod(t, A, B):
    return frozenset(t[a][b] for a in A for b in B)


def is_subgroup(t, K):
    """K is closed and is a group under the restricted product."""
    if any(t[a][b] not in K for a in K for b in K):
        return False
    ids = [e for e in K if all(t[e][x] == x == t[x][e] for x in K)]
    if not ids:
        return False
    e = ids[0]
    return all(any(t[x][y] == e == t[y][x] for y in K) for x in K)


def subgroups_bruteforce(t):
    return sorted((K for K in nonempty_subsets(len(t)) if is_subgroup(t, K)),
                  key=lambda K: sum(1 << x for x in K))


def inverses(t, x):
    n = len(t)
    return [y for y in range(n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]


def is_inverse_by_definition(t):
    return all(len(inverses(t, x)) == 1 for x in range(len(t)))


def is_regular_by_definition(t):
    n = len(t)
    return all(any(t[t[x][y]][x] == x for y in range(n)) for x in range(n))


def lies_in_subgroup(t, x):
    n = len(t)
    return any(x in K and is_subgroup(t, K) for K in nonempty_subsets(n))


def is_clifford_by_definition(t):
    return all(lies_in_subgroup(t, x) for x in range(len(t)))


def is_group(t):
    return is_subgroup(t, frozenset(range(len(t))))


def power_table_bruteforce(t):
    """exp of a table: subsets listed by bit pattern (pattern - 1 is the index)."""
    n = len(t)
    subsets = [frozenset(i for i in range(n) if m >> i & 1) for m in range(1, 1 << n)]
    pos = {K: i for i, K in enumerate(subsets)}
    return [[pos[setprod(t, A, B)] for B in subsets] for A in subsets], subsets


def is_hom(src, dst, f):
    n = len(src)
    return all(f[src[a][b]] == dst[f[a]][f[b]] for a in range(n) for b in range(n))


def all_embeddings(src, dst):
    """Every injective homomorphism, by enumerating all injective maps."""
    from itertools import permutations

    return [list(p) for p in permutations(range(len(dst)), len(src)) if is_hom(src, dst, p)]


def all_homs(src, dst):
    return [list(f) for f in product(range(len(dst)), repeat=len(src)) if is_hom(src, dst, f)]
