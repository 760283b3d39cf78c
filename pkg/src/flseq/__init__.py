"""Character sequences from fractional linear maps over finite fields."""

__version__ = "0.1.0"

from .finite_field import FieldElement, FieldSpec, discrete_log, field_of_order, find_generator, make_field
from .projective_group import (
    MoebiusMap,
    ProjPoint,
    apply,
    compose,
    element_order,
    enumerate_group,
    find_psi,
    fixed_points,
    orbit,
)
from .characters import Character, UnitValue, eval_char, make_character
from .sequence_family import CharSequence, Family, build_family, build_sequence, cyclic_shift, select_phis
from .correlation import autocorrelation, cross_correlation, tmax_auto, tmax_family
from .bounds import antipodal_code_bound, kerdock_params, sidelnikov_estimate, simplified_bound, welch_bound
from .linear_span import berlekamp_massey, lfsr_generate, to_symbol_stream
