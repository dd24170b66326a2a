"""Exact-arithmetic model of a discretised qubit Hilbert space.

States live on a lattice of the Bloch sphere fixed by a prime p > 12. The
package checks, with exact rationals, which counterfactual measurements the
lattice can support, and shows that the quantum predictions are recovered to
within O(1/p) while the counterfactual gaps stay put at every finite p.
"""

from .bloch import DiscreteQubit, born_probabilities, make_state, nearest_admissible
from .chsh import chsh_s_value, completability_scan, singlet_correlation
from .exact import AngleTurns, classify_cos, cos_exact, is_prime, normalize, validate_param
from .spherical import SphericalTriangle, classify_third_side

__all__ = [
    "AngleTurns",
    "DiscreteQubit",
    "SphericalTriangle",
    "born_probabilities",
    "chsh_s_value",
    "classify_cos",
    "classify_third_side",
    "completability_scan",
    "cos_exact",
    "is_prime",
    "make_state",
    "nearest_admissible",
    "normalize",
    "singlet_correlation",
    "validate_param",
]

__version__ = "0.1.0"
