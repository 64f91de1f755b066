"""msvkit: exact computations with matrix Schubert varieties.

Partial permutations and their diagram combinatorics (``perm``), exact sparse
polynomial arithmetic with the antidiagonal term order (``poly``), Schubert
determinantal ideals with Groebner verification of their antidiagonal initial
ideals (``detideal``), the recursive complete intersection classifier with an
independent minimal-generator-count oracle (``ci``), pivot-localization
verification (``frlab``), and a command-line front end (``cli``).
"""

from .perm import (Cell, Diagram, PartialPermutation, all_permutations,
                   coxeter_length, delete_row_col, diagram, essential_set,
                   extend_to_permutation, identity, longest_element, rank_at,
                   render_one_line, submatrix_w)
from .poly import (ANTIDIAGONAL_LEX, ELIMINATION, IdealPresentation, Polynomial,
                   PolyRing, TermOrder, antidiagonal_monomial, buchberger, compare,
                   leading_term, minor, normal_form, s_polynomial, saturate)
from .detideal import (MonomialIdeal, SchubertIdeal, antidiagonal_ideal,
                       fulton_generators, is_nonzerodivisor_on_monomial_quotient,
                       monomial_codim, monomial_quotient_membership, verify_groebner)
from .ci import (CIReport, ci_generators, is_complete_intersection,
                 minimal_generator_count, necessary_condition)
from .frlab import (LocalizationSetup, build_localization, find_pivot,
                    localization_sample, verify_all, verify_localization_identity,
                    verify_pivot_initial_ideal, verify_pivot_minors,
                    verify_pivot_nonzerodivisor, verify_pivot_window)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
