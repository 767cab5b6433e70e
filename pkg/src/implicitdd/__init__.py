"""Exact divided differences of implicit functions and the dissection counts behind them."""

from .numcore import RationalSeries, series_inv, series_mul, series_sqrt, to_rational
from .ddcore import GridSample, UnivariateSamples, bdd, bdd_on_index_ranges, udd, udd_table
from .dissect import (
    Dissection,
    count_dissections_closed_form,
    enumerate_dissections,
    validate_dissection,
)
from .implicit import (
    ImplicitProblem,
    ImplicitRelation,
    dd_direct,
    dd_explicit,
    dd_first_order,
    dd_recurrence,
    make_problem,
    solve_y,
    term_list,
)
from .terms import admissible_s_count, count_terms_by_enumeration, count_terms_dp

__version__ = "0.1.0"
