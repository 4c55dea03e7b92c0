"""Pure Python/numpy versions of the compiled kernels in ``_kernels.pyx``.

Every function returns exactly what its compiled twin returns, including
which witness is reported (the lexicographically least one).
"""

import numpy as np


def find_nonassociative(table):
    n = table.shape[0]
    for i in range(n):
        # left[j, k] = (i*j)*k, right[j, k] = i*(j*k)
        left = table[table[i]]
        right = table[i][table]
        bad = np.flatnonzero(left != right)
        if bad.size:
            j, k = divmod(int(bad[0]), n)
            return (i, j, k)
    return None


def sampled_nonassociative(table, triples):
    i, j, k = triples[:, 0], triples[:, 1], triples[:, 2]
    bad = np.flatnonzero(table[table[i, j], k] != table[i, table[j, k]])
    if bad.size:
        t = triples[bad[0]]
        return (int(t[0]), int(t[1]), int(t[2]))
    return None


def power_table(group):
    n = group.shape[0]
    if n > 62:
        raise ValueError("power_table supports groups of order <= 62")
    size = 1 << n
    masks = np.arange(size, dtype=np.uint64)
    # trans[a, m] = bitmask of the left translate a*M
    trans = np.zeros((n, size), dtype=np.uint64)
    for a in range(n):
        for b in range(n):
            trans[a] |= ((masks >> np.uint64(b)) & np.uint64(1)) << np.uint64(group[a, b])
    out = np.empty((size - 1, size - 1), dtype=np.int32)
    for m in range(1, size):
        low = m & -m
        a = low.bit_length() - 1
        rest = m ^ low
        row = trans[a, 1:]
        if rest:
            row = row | (out[rest - 1].astype(np.uint64) + np.uint64(1))
        out[m - 1] = (row - np.uint64(1)).astype(np.int32)
    return out


def find_nonhomomorphic(src, dst, mapping):
    bad = np.flatnonzero(mapping[src] != dst[np.ix_(mapping, mapping)])
    if bad.size:
        return divmod(int(bad[0]), src.shape[0])
    return None
