"""Exact computer algebra for the restricted quantum group of sl2 at q = exp(i pi / p)."""

from .algebra import AlgebraElement, TensorElement, antipode, coproduct, counit, generators, monomial, multiply
from .center import canonical_central_elements, casimir, center_basis, phi
from .checks import Check, Report, run_suite
from .cyclotomic import CycloNum, field, q_binom, q_fact, q_int
from .errors import ConsistencyError, DomainError, ParameterError, ParseError, RangeError, UqError
from .modules import ModuleSpec, build_rep, dual_right_rep, hom_space, rep_element, tensor_rep
from .parser import eval_expr, evaluate, parse_element, to_source
from .slf import GTACoordinates, LinearForm, decompose_gta, gta_chi, gta_G, is_symmetric, product
from .tables import emit_table
from .traces import TraceData, integral_form, integral_mu, modified_trace, pi_to_slf, slf_to_trace

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "TensorElement",
    "antipode",
    "coproduct",
    "counit",
    "generators",
    "monomial",
    "multiply",
    "canonical_central_elements",
    "casimir",
    "center_basis",
    "phi",
    "Check",
    "Report",
    "run_suite",
    "CycloNum",
    "field",
    "q_binom",
    "q_fact",
    "q_int",
    "ConsistencyError",
    "DomainError",
    "ParameterError",
    "ParseError",
    "RangeError",
    "UqError",
    "ModuleSpec",
    "build_rep",
    "dual_right_rep",
    "hom_space",
    "rep_element",
    "tensor_rep",
    "eval_expr",
    "evaluate",
    "parse_element",
    "to_source",
    "GTACoordinates",
    "LinearForm",
    "decompose_gta",
    "gta_chi",
    "gta_G",
    "is_symmetric",
    "product",
    "emit_table",
    "TraceData",
    "integral_form",
    "integral_mu",
    "modified_trace",
    "pi_to_slf",
    "slf_to_trace",
]
