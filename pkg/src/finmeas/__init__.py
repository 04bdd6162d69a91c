"""finmeas: finite-support distributions over exact semirings.

Distributions form a commutative monad; on top of its unit, pushforward
and mixture structure the package builds strengths and tensors,
integration pairings, convolution on the rational line, conditioning,
and a finite-difference calculus with exact primitives. Every law the
construction promises is checkable, exactly, through `finmeas.laws`.
"""

from .dist import (
    Dist,
    FiniteSpace,
    Left,
    Right,
    biproduct_merge,
    biproduct_split,
    dirac,
    dist_add,
    dist_sub,
    flatten,
    linear_extend,
    pushforward,
    scale,
    total,
)
from .errors import (
    ConditioningError,
    DomainError,
    FinmeasError,
    NoDensityError,
    NoPrimitiveError,
    NormalizationError,
    ParseError,
    SelectionError,
    UnitError,
)
from .laws import GenConfig, LawReport, run_law, run_suite
from .line import (
    AffineMap,
    Step,
    affine_push,
    center_of_gravity,
    convolution_power,
    convolve,
    derivative,
    expectation,
    expectation_as_mu,
    fn_derivative,
    homothety,
    interval,
    leibniz_residual,
    moment,
    primitive,
    translate,
)
from .pairing import (
    Functional,
    TestFn,
    check_frobenius,
    check_switch,
    constant_one,
    density,
    eval_at_eta,
    fn_action,
    fn_pointwise_mul,
    pair,
    semantics,
)
from .probability import (
    condition,
    indicator,
    is_event_table,
    is_independent,
    is_nonnegative,
    is_probability,
    joint,
    marginals,
    normalize,
    rv_sum,
)
from .quantities import UnitTagged, from_pure, rescale_unit, to_pure
from .scalars import BOOLEANS, RATIONALS, Semiring, format_rational, parse_rational
from .strength import (
    FunTable,
    check_1linear,
    check_2linear,
    check_bilinear,
    check_linear,
    cotensor_strength,
    enumerate_tables,
    extend_1linear,
    extend_2linear,
    extend_bilinear,
    strength_left,
    strength_right,
    structure_map,
    tensor,
    tensor_iterated,
)

__version__ = "0.1.0"
