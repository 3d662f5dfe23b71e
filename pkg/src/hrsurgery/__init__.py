"""Logical measurement of high-rate qLDPC codes by generalized lattice surgery."""

from . import f2core
from .codes import CssCode, DegreeProfile, SubsystemCode, canonical_basis, degree_profile
from .codes import estimate_distance, exhaustive_distance
from .constructions import ClassicalCode, ScHgpSpec, bivariate_bicycle, hgp, sc_hgp, tensor_code
from .surgery import SurgeryDiagram, measured_space, merge, soundness_certificate, verify_diagram
from .randomized import GrowthConfig, construct
from .analysis import compare_schemes, overhead, sweep

__version__ = "0.1.0"
