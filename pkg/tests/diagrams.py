"""Generators of small valid surgery diagrams for property tests."""

import numpy as np

from hrsurgery import f2core as f2
from hrsurgery.codes import CssCode
from hrsurgery.constructions import hamming, hgp, rep, rep_cyclic
from hrsurgery.surgery import SurgeryDiagram, chain_map_completion, homomorphism_from, hgp_ancilla_for_hgp_data


def small_data_codes():
    return [
        hgp(rep(2).h, rep(2).h.T, name="hgp_rep2"),
        CssCode(hamming(3).h, hamming(3).h, name="steane"),
        hgp(rep(3).h, rep(3).h.T, name="surface13"),
        hgp(rep_cyclic(3).h, rep_cyclic(3).h.T, name="toric18"),
    ]


def random_diagram(data: CssCode, a1: int, a0: int, am1: int, rng: np.random.Generator,
                   density: float = 0.35) -> SurgeryDiagram:
    """Uniform-ish valid diagram: gamma1 sends ker d1 into ker hz, gamma0 completes the square."""
    n = data.n
    d1 = (rng.random((a0, a1)) < density).astype(np.uint8)
    lk = f2.left_kernel_basis(d1) if a0 else f2.zeros(0, 0)
    if am1 and lk.shape[0]:
        d0 = f2.matmul(rng.integers(0, 2, (am1, lk.shape[0])).astype(np.uint8), lk)
    else:
        d0 = f2.zeros(0, a0)
    ker = f2.kernel_basis(d1) if a0 else f2.identity(a1)
    comp = f2.complement_basis(ker, f2.identity(a1))
    basis = f2.vstack([ker, comp]).reshape(a1, a1)
    zk = f2.kernel_basis(data.hz) if data.hz.shape[0] else f2.identity(n)
    # images: ker vectors land in ker hz, complement vectors anywhere
    img_k = f2.matmul(rng.integers(0, 2, (ker.shape[0], zk.shape[0])).astype(np.uint8), zk) \
        if ker.shape[0] else f2.zeros(0, n)
    img_c = (rng.random((comp.shape[0], n)) < density).astype(np.uint8)
    img = f2.vstack([img_k, img_c]).reshape(a1, n)
    # gamma1 basis^T = img^T
    gamma1 = f2.matmul(img.T, f2.inverse(basis).T)
    gamma0 = chain_map_completion(d1, data.hz, gamma1)
    assert gamma0 is not None
    return SurgeryDiagram(data, d1, d0, gamma1, gamma0)


def path_diagram(data: CssCode, logical: int = 0) -> SurgeryDiagram:
    """Repetition-code ancilla along the support of one X logical."""
    supp = np.flatnonzero(data.lx[logical])
    m = len(supp)
    # X checks sit on the support qubits, ancilla qubits on the edges between them
    d1 = f2.zeros(m - 1, m)
    for i in range(m - 1):
        d1[i, i] = d1[i, i + 1] = 1
    gamma1 = f2.zeros(data.n, m)
    gamma1[supp, np.arange(m)] = 1
    gamma0 = chain_map_completion(d1, data.hz, gamma1)
    return SurgeryDiagram(data, d1, f2.zeros(0, m - 1), gamma1, gamma0)


def hgp_identity_diagram(data: CssCode, columns: int = 1) -> SurgeryDiagram:
    fac = data.meta["hgp_factors"]
    b = f2.from_supports(fac["b"]["rows"], fac["b"]["n_cols"])
    from hrsurgery.constructions import ClassicalCode
    bc = ClassicalCode(b)
    homs = [homomorphism_from(bc, "identity") for _ in range(columns)]
    return hgp_ancilla_for_hgp_data(data, homs, rep(2))
