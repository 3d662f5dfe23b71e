"""
Randomized ancilla for the Gross code
=====================================

Measure three random logicals of the [[144,12,12]] bivariate bicycle code in
a random basis.  The ancilla starts as the restriction of the data Z checks
to the logical support and grows one qubit at a time, each time cutting the
lightest dressed X logicals, until the randomized search no longer finds any
of weight below 12.
"""

import numpy as np

from hrsurgery.analysis import overhead
from hrsurgery.codes import degree_profile
from hrsurgery.constructions import gross_code
from hrsurgery.randomized import GrowthConfig, construct, random_targets

data = gross_code()
seed = 1
targets = random_targets(data, 3, np.random.default_rng(seed))
cfg = GrowthConfig(target_d=12, strict_layers=True)


def show(entry):
    if entry["step"] % 10 == 0:
        print(f"step {entry['step']:3d}  layers={entry['layers']}  |A|={entry['ancilla_size']}  "
              f"lightest={entry['min_weight']}  classes={entry['light_classes']}")


res = construct(data, targets, cfg, seed=seed, log=show)
fin = res.report["final"]
print(f"certified={res.certified}  |A|={fin['ancilla_size']} (qubits {fin['n_a0']}, X checks {fin['n_a1']}, "
      f"Z checks {fin['n_am1']})  layers={fin['layers']}")
p = degree_profile(res.merged)
print(f"merged degree {p.max_qubit_degree}, check weights {p.max_check_weight_x}/{p.max_check_weight_z} "
      f"(limit {fin['degree_limit']})")
r = overhead(res.merged, 3, d=12)
print(f"alpha={r.alpha:.2f}  memory={r.baseline_alpha:.2f}  ratio={r.ratio_to_memory:.2f}")
