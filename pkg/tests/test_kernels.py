import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersg import kernels
from hypersg.library import cyclic, klein, symmetric

import oracles


@st.composite
def tables(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return np.array(flat, dtype=np.int32).reshape(n, n)


@given(tables())
@settings(max_examples=300, deadline=None)
def test_nonassociative_witness_matches_bruteforce(t):
    expected = oracles.first_nonassociative(t.tolist())
    for name in (["pure", "compiled"] if kernels.compiled_available() else ["pure"]):
        assert kernels.backend_module(name).find_nonassociative(t) == expected


def test_known_witness(backend):
    t = np.array([[1, 0], [0, 0]], dtype=np.int32)
    assert backend.find_nonassociative(t) == (0, 0, 1)


@pytest.mark.parametrize("G", [cyclic(1), cyclic(2), cyclic(3), klein(), symmetric(3)],
                         ids=["Z1", "Z2", "Z3", "Klein", "S3"])
def test_power_table_matches_bruteforce(backend, G):
    expected, _ = oracles.power_table_bruteforce(G.rows)
    got = backend.power_table(np.ascontiguousarray(G.table))
    assert got.tolist() == expected


def test_backends_agree_on_larger_power_table():
    if not kernels.compiled_available():
        pytest.skip("compiled kernels not built")
    G = cyclic(8)
    a = kernels.backend_module("pure").power_table(np.ascontiguousarray(G.table))
    b = kernels.backend_module("compiled").power_table(np.ascontiguousarray(G.table))
    assert np.array_equal(a, b)


@given(tables(max_n=4), st.data())
@settings(max_examples=200, deadline=None)
def test_nonhomomorphic_witness(t, data):
    n = t.shape[0]
    m = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    mapping = np.array(m, dtype=np.int32)
    expected = None
    for a in range(n):
        for b in range(n):
            if expected is None and m[t[a, b]] != t[m[a], m[b]]:
                expected = (a, b)
    for name in (["pure", "compiled"] if kernels.compiled_available() else ["pure"]):
        got = kernels.backend_module(name).find_nonhomomorphic(t, t, mapping)
        assert (tuple(got) if got is not None else None) == expected


def test_sampled_check_finds_planted_failure(backend):
    t = np.array([[1, 0], [0, 0]], dtype=np.int32)
    triples = np.array([[0, 0, 0], [0, 0, 1]], dtype=np.int32)
    assert backend.sampled_nonassociative(t, triples) == (0, 0, 1)
    assert backend.sampled_nonassociative(t, triples[:1]) is None


def test_env_override_selects_pure(monkeypatch):
    import importlib

    monkeypatch.setenv("HSG_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "pure"
    finally:
        monkeypatch.delenv("HSG_PURE_PYTHON")
        importlib.reload(kernels)
