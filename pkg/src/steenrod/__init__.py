"""Steenrod operations on polynomials over finite fields, the Adem-Wu
relations, the Milnor basis and its dual, and the Bockstein on forms."""

from .action import (
    TruncatedSeries,
    XiSeries,
    apply_basic_monomial,
    apply_element,
    check_bullett_macdonald,
    check_cartan,
    steenrod_op,
    total_power,
    wu_elementary,
)
from .algebra import (
    SteenrodElement,
    TensorElement,
    adem_wu_expand,
    admissible_of_degree,
    coproduct,
    enumerate_admissible,
    excess,
    is_admissible,
    moment,
    product,
    to_admissible,
)
from .embedding import theta, theta_admissible, theta_star
from .errors import *  # noqa: F401,F403
from .expr import format_expr, parse, parse_value
from .forms import DifferentialForm, bockstein, form_mul, total_power_on_forms
from .galois import FieldElement, FieldSpec, binom_mod_p, field_new, frobenius, parse_field
from .milnor import (
    DualElement,
    DualTensor,
    MilnorElement,
    admissible_to_milnor,
    dual_coproduct,
    milnor_primitive,
    milnor_product,
    milnor_to_admissible,
    pair,
    pairing,
    profile,
)
from .polynomials import (
    LinearMap,
    Polynomial,
    elementary_symmetric,
    poly_add,
    poly_mul,
    poly_scale,
    substitute,
)

__version__ = "0.1.0"
