"""
Hypergraph products and homomorphic measurement
================================================

Build the [[58,16,3]] product of the Hamming code with its transpose, then
attach tensor-product ancillas through classical code homomorphisms and look
at which logical classes each one measures.
"""

import numpy as np

from hrsurgery import f2core as f2
from hrsurgery.codes import estimate_distance
from hrsurgery.constructions import ClassicalCode, hamming, hgp, rep
from hrsurgery.surgery import hgp_ancilla_for_hgp_data, homomorphism_from, measured_space, merge

h = hamming(3)
code = hgp(h.h, h.transpose().h, name="hgp58")
d, _ = estimate_distance(code, "X", n_trials=200, seed=0)
print(f"{code!r}  d_X <= {d:.0f}")

# canonical basis: every X logical is a Hamming codeword times a unit vector
print("logical weights:", sorted(set(f2.row_weights(code.lx).tolist())))

# identity maps on two columns: the ancilla measures all 4 logicals in each column
ident = homomorphism_from(h, "identity")
diag = hgp_ancilla_for_hgp_data(code, [ident, ident], ClassicalCode(np.kron(np.eye(2, dtype=np.uint8), rep(3).h)))
ms = measured_space(diag)
print(f"identity x2: |A|={diag.ancilla_size} measured={ms.coefficients.shape[0]} ier={ms.ier:.4f}")

# a logical check that punctures logical 0 and ties logicals 1 and 2 together
hom = homomorphism_from(h, "logical_check", h_i=[[1, 0, 0, 0], [0, 1, 1, 0]])
diag = hgp_ancilla_for_hgp_data(code, [hom], rep(3))
ms = measured_space(diag)
print(f"logical check: measured={ms.coefficients.shape[0]} (4 - 2 filtered)")

# superposing an automorphism with the identity measures products of logicals
perm = [1, 0, 2, 3, 5, 4, 6]            # swapping the two low syndrome bits
sigma = homomorphism_from(h, "automorphism", perm=perm)
both = homomorphism_from(h, "superpose", a=sigma, b=ident)
print("action of sigma + I:\n", both.action)
diag = hgp_ancilla_for_hgp_data(code, [both], rep(3))
merged = merge(diag)
print(f"sigma + I: measured={measured_space(diag).coefficients.shape[0]} merged k={merged.k} gauge={merged.n_gauge}")
print("measured class coefficients:", f2.to_supports(measured_space(diag).coefficients))
