"""
Measured operators, merged codes and the soundness certificate
==============================================================

A repetition-code ancilla along one logical of the 3x3 toric code: what it
measures, the gauge structure of the merged code, and how the soundness of
the ancilla boundary bounds the merged distance.
"""

import numpy as np

from hrsurgery import f2core as f2
from hrsurgery.codes import exhaustive_distance
from hrsurgery.constructions import hgp, rep, rep_cyclic, tensor_code
from hrsurgery.surgery import (SurgeryDiagram, chain_map_completion, check_z_distance_preserved,
                               measured_space, merge, soundness, soundness_certificate, surgery_schedule)

data = hgp(rep_cyclic(3).h, rep_cyclic(3).h.T, name="toric18")
supp = np.flatnonzero(data.lx[0])
m = len(supp)

# X checks on the logical support, ancilla qubits on the edges of a path through them
d1 = f2.zeros(m - 1, m)
for i in range(m - 1):
    d1[i, i] = d1[i, i + 1] = 1
g1 = f2.zeros(data.n, m)
g1[supp, np.arange(m)] = 1
g0 = chain_map_completion(d1, data.hz, g1)
diag = SurgeryDiagram(data, d1, f2.zeros(0, m - 1), g1, g0)

ms = measured_space(diag)
print(f"|A|={diag.ancilla_size} measured classes={f2.to_supports(ms.coefficients)} ier={ms.ier:.3f}")
merged = merge(diag)
print(f"merged [[{merged.n},{merged.k}]] gauge={merged.n_gauge}")
print("dX:", exhaustive_distance(data, "X"), "->", exhaustive_distance(merged, "X"))
print("Z distance preserved:", check_z_distance_preserved(merged)["ok"])

cert = soundness_certificate(diag)
print(f"rho={cert.rho} |gamma1|={cert.gamma1_degree} bound={cert.bound} hypotheses hold: {cert.applicable}")

# the checks of a tensor code: reduced distance grows at most quadratically in the syndrome
t = tensor_code(rep(3).h, rep(3).h)
print("soundness of rep3 x rep3 up to t=4:", soundness(t.h, 4))

sch = surgery_schedule(diag, rounds=3)
for step in sch.steps:
    print(" -", step)
print("outcome = product of ancilla X checks", sch.outcome_checks[0])
