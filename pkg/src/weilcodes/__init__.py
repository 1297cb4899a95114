"""weilcodes: exact trace-code construction, enumeration, and verification over F_p.

Two independent routes to every quantity: exhaustive scans/sums (`codes`,
the *_bruteforce operations in `charsum`) and closed forms (`theory`, the
*_closed operations).  All arithmetic is exact: finite-field elements,
integers, and cyclotomic integers in Z[zeta_p].
"""

from .bounds import GriesmerReport, classify, griesmer, pless_check
from .charsum import (
    CycInt,
    GaussScale,
    OddQuotient,
    ZeroA,
    eta1,
    gamma_of,
    gauss_sum_bruteforce,
    gauss_sum_closed,
    orthogonality_sum,
    quad_sum_bruteforce,
    quad_sum_closed,
    restricted_power_check,
    weil_sum_bruteforce,
    weil_sum_closed,
    weil_sum_scalar_closed,
)
from .codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CodeSpec,
    DefiningSet,
    EnumerationResult,
    build_defining_set,
    complete_weight_enumerator,
    dump_lines,
    encode,
    symbol_count_table,
    verify_dimension,
    we_from_cwe,
)
from .gf import (
    CompositeP,
    DivisionByZero,
    FFElement,
    FieldMismatch,
    FiniteField,
    GFError,
    LinOperator,
    ReducibleModulus,
    SolutionSet,
    cached_field,
    eta,
    field_create,
    linearized_operator,
    solve_linear,
    trace,
)
from .theory import (
    TAB,
    CaseKey,
    PredictedEnumerator,
    UnmatchedCase,
    WrongRegime,
    case_of,
    count_A_bar,
    count_A_tilde,
    count_B,
    predict_cwe,
    predict_length,
    predict_symbol_counts,
    predicted_table,
    tab,
)

__all__ = [
    "BudgetExceeded",
    "CaseKey",
    "CodeSpec",
    "CompositeP",
    "CycInt",
    "DEFAULT_BUDGET",
    "DefiningSet",
    "DivisionByZero",
    "EnumerationResult",
    "FFElement",
    "FieldMismatch",
    "FiniteField",
    "GFError",
    "GaussScale",
    "GriesmerReport",
    "LinOperator",
    "OddQuotient",
    "PredictedEnumerator",
    "ReducibleModulus",
    "SolutionSet",
    "TAB",
    "UnmatchedCase",
    "WrongRegime",
    "ZeroA",
    "build_defining_set",
    "cached_field",
    "case_of",
    "classify",
    "complete_weight_enumerator",
    "count_A_bar",
    "count_A_tilde",
    "count_B",
    "dump_lines",
    "encode",
    "eta",
    "eta1",
    "field_create",
    "gamma_of",
    "gauss_sum_bruteforce",
    "gauss_sum_closed",
    "griesmer",
    "linearized_operator",
    "orthogonality_sum",
    "pless_check",
    "predict_cwe",
    "predict_length",
    "predict_symbol_counts",
    "predicted_table",
    "quad_sum_bruteforce",
    "quad_sum_closed",
    "restricted_power_check",
    "solve_linear",
    "symbol_count_table",
    "tab",
    "trace",
    "verify_dimension",
    "we_from_cwe",
    "weil_sum_bruteforce",
    "weil_sum_closed",
    "weil_sum_scalar_closed",
]
