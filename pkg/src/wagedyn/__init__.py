"""Dynamic supervision-and-incentive wage model.

Worker effort optimization under random evaluation, exact wage-distribution
dynamics, and employer contract optimization, with reproduction checks for the
published tables at desk scale.
"""
from .additive import (AdditiveSolution, AffineEffortPolicy, closed_form_effort,
                       deterministic_path, phi_series_recursive,
                       single_period_effort, single_period_variance,
                       single_period_wage_pair, solve_backward_induction,
                       wage_support)
from .cobb_douglas import (DpGrid, EffortPolicy, TableEffortPolicy,
                           always_sampled_path, policy_monotonicity_report,
                           solve_policy)
from .distribution import (Histogram, ProfileSeries, WageDistribution, bracketize,
                           enumerate_histories, profile, propagate, simulate)
from .employer import (GridSteps, OptimalContract, analytic_one_period_optimum,
                       expected_profit, grid_search_optimum,
                       profit_by_history_enumeration,
                       stationary_one_period_optimum, tech_shock, tech_sweep)
from .model import (DomainError, bonus, consumption, deserved_wage, period_utility,
                    production, wage_update)
from .params import (ContractParams, FirmParams, Horizon, UtilityFamily,
                     WorkerPrefs)
from .statics import (EffortSensitivity, effort_sensitivity, foc_residual,
                      optimal_effort, optimal_effort_search, sensitivity_grid)

__version__ = "0.1.0"
