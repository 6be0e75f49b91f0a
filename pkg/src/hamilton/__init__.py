"""Exact computations in the free algebra on two quadratic generators ``a`` and ``b``.

Elements are stored in the basis ``(1, a, b, ab)`` over the centre ``F[w]``.
"""
from .automorphisms import (AutDecomposition, BasicAut, basic_aut_catalog, basic_aut_group, decompose_automorphism,
                            factor_unit)
from .basic import BasicVector, canonical_zero_divisor, side_kind, zero_divisors_of_side
from .conjugacy import BasicClass, SharpClass, conjugacy_invariant, is_special_degenerate, sharp_generator
from .core import (HamiltonElement, annihilator, commutator, conjugate, gram_det, gram_matrix, inner, invert,
                   is_quadratic, is_unit, is_zero_divisor, mat4_embedding, minimal_quadratic, norm, normalize, star,
                   trace)
from .errors import (BudgetExceededError, FieldMismatchError, HamiltonError, InternalError, NotAnAutomorphismError,
                     NotAUnitError, ParamsMismatchError, PreconditionError, UnsupportedError)
from .field import Field, FieldValue
from .params import AlgebraParams, mat4_generators
from .parser import GRAMMAR, ParseError, parse, parse_element, parse_poly, parse_word
from .poly import CenterPoly
from .retracing import distance, leading_vector, refined_retrace, retrace
from .specialization import (laffey_idempotents, mat2_demo_embedding, maximal_ideals_above, radical_report,
                             specialize, split_witness)
from .units import BasicUnit, ReducedDecomposition, SemiBasicUnit, semi_basic_unit
from .words import WordExpr, omega_to_word, word_mul, word_to_omega

__all__ = [name for name in dir() if not name.startswith("_")]
