"""Exact word algebra, harmonic sums, polylogarithm Taylor data and the
regularized zeta character with its eulerian functions."""

from .comb import egf_check, shuffle_power_coeff, stirling2, surjections
from .harmonic import (
    HarmonicTable,
    SummabilityReport,
    dom_witness,
    harmonic_matrix,
    hsum,
    hsum_oracle,
    hsum_values,
    li_coeffs,
    li_over_1mz_coeffs,
    preimage_from_taylor,
    summability_diagnostic,
)
from .ncalg import (
    GradedSeries,
    NCPolynomial,
    PlaneSeries,
    char_stuffle_inverse,
    char_stuffle_product,
    conc,
    conc_star,
    one_param_group,
    pairing,
    shuffle,
    stuffle,
    stuffle_exp,
    stuffle_log,
    umbral_decode,
    umbral_encode,
)
from .parsing import ParseError, parse_expression
from .rings import QQ, ComplexField, PolynomialRing, PrecisionContext, PrecisionError
from .taylor import TaylorSeries
from .words import X, Y, AlphabetError, DomainError, Word, is_convergent, parse_word, pi_x, pi_y
from .zeta import (
    CharacterValue,
    RegularizedValue,
    bernoulli,
    ell,
    euler_gamma,
    gamma_char,
    gamma_char_hat,
    inv_gamma_yk,
    mzv,
    predicted_zeros,
    reflection_check,
    stuffle_regularize,
    symmetrize,
    zeta_int,
)

__version__ = "0.1.0"
