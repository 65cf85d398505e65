"""Integral-point census for binary norm equations over real quadratic fields.

Decides integral solvability of N(a1*x + a2*y) = m through a character-sum
criterion on the narrow class group, predicts the logarithmic growth rate of
the integral point count, and cross-validates both against exact orbit-based
and brute-force counts.
"""

from .arith import (
    Factorization,
    factorize,
    hilbert_symbol,
    is_perfect_square,
    is_prime,
    kronecker,
    sqrt_mod_prime_power,
)
from .quadfield import FieldData, QuadElem, field_data
from .classgroup import (
    Character,
    Form,
    NarrowClassGroup,
    characters,
    class_group,
    compose,
    frobenius_class,
    reduce_form,
    sign_class,
)
from .census import (
    CensusVerdict,
    EquationSpec,
    c_m,
    classify_primes,
    equation_spec,
    neg_pell_solvable,
    pell34_criterion,
    predicted_slope,
    verdict,
)
from .counting import (
    SolutionOrbits,
    brute_count,
    calibration,
    count_via_orbits,
    exact_slope,
    fundamental_solutions,
)
from .localdata import (
    arch_volume_hyperbola,
    lemvol_coefficient,
    local_density,
    locally_solvable,
)
from .hassewitt import (
    CnaReport,
    QuadraticSpace,
    arch_h_limit,
    c_n_a,
    diagonalize,
    hasse_invariant,
    isometry_count_mod8,
)

__all__ = [
    "Factorization",
    "factorize",
    "hilbert_symbol",
    "is_perfect_square",
    "is_prime",
    "kronecker",
    "sqrt_mod_prime_power",
    "FieldData",
    "QuadElem",
    "field_data",
    "Character",
    "Form",
    "NarrowClassGroup",
    "characters",
    "class_group",
    "compose",
    "frobenius_class",
    "reduce_form",
    "sign_class",
    "CensusVerdict",
    "EquationSpec",
    "c_m",
    "classify_primes",
    "equation_spec",
    "neg_pell_solvable",
    "pell34_criterion",
    "predicted_slope",
    "verdict",
    "SolutionOrbits",
    "brute_count",
    "calibration",
    "count_via_orbits",
    "exact_slope",
    "fundamental_solutions",
    "arch_volume_hyperbola",
    "lemvol_coefficient",
    "local_density",
    "locally_solvable",
    "CnaReport",
    "QuadraticSpace",
    "arch_h_limit",
    "c_n_a",
    "diagonalize",
    "hasse_invariant",
    "isometry_count_mod8",
]
