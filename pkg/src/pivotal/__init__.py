"""Influence and pivotal-set analysis of Boolean functions under biased
Bernoulli product measures, with an inequality verification harness."""

from .core import (
    MAX_EXACT_N,
    BooleanFunction,
    FunctionOracle,
    PivotalError,
    discrete_derivative,
    dump_table,
    family,
    is_monotone,
    load_table,
    parse_table,
    pivotal_set,
    set_coordinate,
    weight_enumerator,
)
from .expr import ParseError, compile_expr, eval_expr, parse, to_text
from .influence import (
    ConditionalStats,
    InfluenceProfile,
    conditional_stats,
    correlation_xi,
    influence,
    pivotal_indicator,
    second_order,
    total_influence,
)
from .measure import (
    expectation,
    inner_product,
    mean_derivative,
    mean_poly,
    prob,
    s_n,
    verify_trick_identity,
    x_value,
)
from .results import CheckResult
from .checks import (
    TailPoint,
    check_majority_asymptotic,
    etalag_scan,
    exact_tail,
    hoeffding_bound,
    run_suite,
)
from .sampling import (
    GENERATOR_ID,
    SampleEstimate,
    estimate_influence,
    estimate_mean,
    estimate_total_influence,
    sample_config,
)

__version__ = "0.1.0"
