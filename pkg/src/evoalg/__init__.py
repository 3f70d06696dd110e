"""Evolution algebras corresponding to two permutations, in exact arithmetic."""
from .algebra import (EvolutionAlgebra, as_rational, basis_vector, build_algebra,
                      direct_sum, empty_algebra, fmt_rational, j_map, multiply, square,
                      structural_matrix)
from .baric import WeightFunction, verify_character, weight_functions
from .errors import (DegreeMismatchError, EqualPermutationsError, InvalidAlgebraError,
                     NotConjugateError, PreconditionError)
from .idempotent import (idempotent_system, idempotents_2d, uniform_idempotent,
                         verify_idempotent)
from .iso import (BasisMap, canonical_cycle_form, conjugate_iso, decompose,
                  reverse_cycle_form, to_A_n, verify_isomorphism)
from .nilpotent import (absolute_nilpotents, cone_oracle, nilpotent_system, rank_reduction,
                        solve_cycle, unique_trivial_quick, unique_trivial_rank_nm2)
from .perm import (Permutation, are_conjugate, compose, conjugator, cycle_decomposition,
                   inverse, power)

__all__ = [
    "absolute_nilpotents", "are_conjugate", "as_rational", "basis_vector", "BasisMap",
    "build_algebra", "canonical_cycle_form", "compose", "cone_oracle", "conjugate_iso",
    "conjugator", "cycle_decomposition", "decompose", "DegreeMismatchError", "direct_sum",
    "empty_algebra", "EqualPermutationsError", "EvolutionAlgebra", "fmt_rational",
    "idempotent_system", "idempotents_2d", "InvalidAlgebraError", "inverse", "j_map",
    "multiply", "nilpotent_system", "NotConjugateError", "Permutation", "power",
    "PreconditionError", "rank_reduction", "reverse_cycle_form", "solve_cycle", "square",
    "structural_matrix", "to_A_n", "uniform_idempotent", "unique_trivial_quick",
    "unique_trivial_rank_nm2", "verify_character", "verify_idempotent", "verify_isomorphism",
    "weight_functions", "WeightFunction"
]

__version__ = "0.1.0"
