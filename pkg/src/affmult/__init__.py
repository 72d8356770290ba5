"""Exact computation of outer multiplicities of level-2 simple modules
in tensor products of level-1 fundamental modules of affine type A,
together with the supporting combinatorics: bounded partitions and
Gaussian binomials, charged tableaux, affine Weyl orbit formulas, flag
multiplicity polynomials, and a truncated-character verification oracle.
"""

from .affine_cartan import (
    AffineWeight,
    FiniteWeight,
    affine_Lambda,
    affine_alpha,
    affine_bilinear,
    affine_delta,
    alpha,
    bilinear,
    cartan_matrix,
    eps_coords,
    in_root_lattice,
    inverse_cartan,
    omega,
    quadratic_f,
    theta,
    weight_from_eps,
)
from .char_oracle import freudenthal_character, tensor_outer_multiplicities
from .laurent import LaurentPoly
from .multiplicities import (
    eta_from_xi,
    flag_multiplicity_at,
    flag_multiplicity_poly,
    general_fundamental,
    mu_split,
    outer_multiplicity_formula,
    outer_multiplicity_limit,
    tau_formula,
    xi_from_eta,
)
from .partitions import (
    enumerate_bounded,
    q_binomial,
    q_binomial_product,
    rho,
    rho_multi,
    stabilize_bijection,
)
from .tableaux import (
    charged_tableau,
    content_character,
    is_mw,
    is_regular,
    jk_from_eta,
    tau_bruteforce,
)
from .weyl_orbits import (
    OrbitPair,
    b_vector,
    cofinal_weight,
    enumerate_gamma,
    gamma_contains,
    level_two_family,
    r_of,
    reduced_pair_length,
    simple_reflection,
    socle_formula,
    socle_oracle,
    translation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
