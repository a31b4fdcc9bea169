"""Exact engine for simplicial plate modules.

Plates are indicator functions of flag cones on the scaled simplex; this
package expands them in the standard basis (symbolically and through a
geometric oracle), computes the symmetric-group characters of the plate
modules by four independent routes, and verifies the power-to-Eulerian
identity at the level of characters.
"""

from .combinatorics import (
    Permutation,
    compose,
    cycle_type,
    enumerate_compositions,
    enumerate_osp,
    eulerian,
    eulerian_row,
    parse_permutation,
    partitions,
)
from .core import (
    Plate,
    PlateParseError,
    all_plates,
    apply_permutation,
    evaluate,
    is_standard,
    lumpings,
    parse_plate,
    print_plate,
    rotate,
    standard_basis,
)
from .exactnum import (
    CyclotomicNumber,
    OrderMismatchError,
    Rational,
    cyclotomic_polynomial,
    euler_phi,
    q_pow,
    zeta_pow,
)
from .expansion import (
    PlateVector,
    QPlate,
    expand,
    lumped_shuffles,
    oracle_expand,
    plate_vector,
    qbasis_is_invertible,
    qbasis_matrix,
    qplate,
    qplate_expand,
)
from .characters import (
    ClassFunction,
    NotACharacterError,
    action_matrix,
    gcd_character,
    gcd_formula,
    irreducible_dimension,
    mn_character,
    multiplicities,
    plate_character,
    sym_power_character,
    trivial_multiplicity_series,
)
from .oracle import (
    GenericSamplingError,
    SamplePlan,
    SpanError,
    rank_of_span,
    sample_generic,
    solve_in_basis,
    verify_identity_ae,
)
from .translation import (
    TranslationElement,
    admissible_labels,
    diophantine_count,
    fixed_label_count,
    idempotent,
    normalize_word,
    ta_act,
    ta_multiply,
    ta_trace,
    verify_partition_of_unity,
)
from .worpitzky import (
    WorpitzkyReport,
    classical_worpitzky_check,
    derive_hypersimplex_characters,
    verify_categorified_worpitzky,
)

__version__ = "0.1.0"
