import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from hrsurgery import f2core as f2
from hrsurgery.codes import degree_profile, estimate_distance
from hrsurgery.constructions import (ClassicalCode, ScHgpSpec, all_ones, bivariate_bicycle, gross_code,
                                     hamming, hgp, random_regular, rep, sc_hgp, search_sc_seed,
                                     tensor_code)

small_h = st.tuples(st.integers(1, 4), st.integers(1, 5)).flatmap(
    lambda s: arrays(np.uint8, s, elements=st.integers(0, 1)))


def kunneth(b, d):
    kb = b.shape[1] - oracles.rank(b)
    kbt = b.shape[0] - oracles.rank(b)
    kd = d.shape[1] - oracles.rank(d)
    kdt = d.shape[0] - oracles.rank(d)
    n = b.shape[1] * d.shape[0] + b.shape[0] * d.shape[1]
    return n, kbt * kd + kb * kdt


@given(small_h, small_h)
def test_hgp_kunneth_and_chain_condition(b, d):
    c = hgp(b, d)
    n, k = kunneth(b, d)
    assert c.n == n
    assert oracles.css_k(c.hx, c.hz, c.n) == k == c.k
    assert not f2.matmul(c.hx, c.hz.T).any()


def test_hamming_hgp_58_16_3():
    h = hamming(3)
    c = hgp(h.h, h.transpose().h)
    assert (c.n, c.k) == (58, 16)
    assert estimate_distance(c, "X", n_trials=100, seed=0)[0] == 3


def test_smallest_surface_instance():
    c = hgp(rep(2).h, rep(2).h.T)
    assert (c.n, c.k) == (5, 1)


def test_trivial_kernels_give_k0():
    c = hgp(f2.identity(3), f2.identity(2))
    assert c.k == 0


@pytest.mark.parametrize("b,d,k", [(rep(3), rep(3), 1), (hamming(3), hamming(3), 16),
                                   (rep(3), ClassicalCode(f2.identity(4)), 0)])
def test_tensor_kernel_dimension(b, d, k):
    t = tensor_code(b.h, d.h)
    assert t.k == k


@given(small_h, small_h)
def test_tensor_kernel_is_product(b, d):
    t = tensor_code(b, d)
    kb, kd = b.shape[1] - oracles.rank(b), d.shape[1] - oracles.rank(d)
    assert t.k == kb * kd
    if t.n <= 16:
        kerb, kerd = f2.kernel_basis(b), f2.kernel_basis(d)
        prod = np.array([np.kron(x, y) for x in kerb for y in kerd], np.uint8).reshape(-1, t.n)
        assert oracles.span(prod) == oracles.kernel(t.h, t.n)


def test_classical_library():
    assert rep(5).k == 1 and rep(5).distance() == 5
    assert (hamming(3).n, hamming(3).k, hamming(3).distance()) == (7, 4, 3)
    r = random_regular(12, 3, 4, seed=2)
    assert (r.h.sum(axis=0) == 3).all() and (r.h.sum(axis=1) == 4).all()
    assert r.k == 12 - oracles.rank(r.h)


def test_bivariate_bicycle_trivial_and_gross():
    c = bivariate_bicycle(3, 3, [(0, 0)], [(0, 0)])
    assert np.array_equal(c.hx, np.hstack([np.eye(9), np.eye(9)]).astype(np.uint8))
    g = gross_code()
    assert (g.n, g.k) == (144, 12)
    p = degree_profile(g)
    assert p.max_qubit_degree == 6 and p.max_check_weight == 6


@given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 100))
def test_bb_commutes(l, m, seed):
    rng = np.random.default_rng(seed)
    terms = lambda: [tuple(int(x) for x in rng.integers(0, 5, 2)) for _ in range(3)]
    c = bivariate_bicycle(l, m, terms(), terms())
    assert not f2.matmul(c.hx, c.hz.T).any()


def test_sc_hgp_uncoupled_l1_is_base_hgp():
    base = hamming(3).h
    a = sc_hgp(ScHgpSpec(base, 1, 0, 0))
    b = hgp(base, base.T)
    assert np.array_equal(a.hx, b.hx) and np.array_equal(a.hz, b.hz)


@pytest.mark.parametrize("rc,nc,L", [(3, 5, 2), (3, 6, 3), (3, 4, 2)])
def test_sc_hgp_size_and_rate_bound(rc, nc, L):
    for seed in range(3):
        c = sc_hgp(ScHgpSpec(all_ones(rc, nc).h, L, 1, seed))
        n0 = rc * rc + nc * nc
        assert c.n == n0 * L * L
        assert c.k >= (n0 - 2 * rc * nc) * L * L
        assert not f2.matmul(c.hx, c.hz.T).any()


def test_sc_seed_search_deterministic():
    base = all_ones(3, 5).h
    assert search_sc_seed(base, 2, 1, range(12)) == search_sc_seed(base, 2, 1, range(12), jobs=3)
    s, k = search_sc_seed(base, 2, 1, range(20), target_k=34)
    assert k == 34 and sc_hgp(ScHgpSpec(base, 2, 1, s)).k == 34
