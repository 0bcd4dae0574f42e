import numpy as np
import pytest

from wagedyn import (ContractParams, DpGrid, Horizon, TableEffortPolicy,
                     WorkerPrefs, always_sampled_path, policy_monotonicity_report,
                     solve_policy)

CONTRACT = ContractParams(0.2, 0.1, 0.4)
PREFS = WorkerPrefs.cobb_douglas(delta=0.9, gamma=0.4, beta=0.6)
T10 = Horizon(10)


@pytest.fixture(scope="module")
def policy():
    return solve_policy(CONTRACT, PREFS, T10)


def test_grid_validation():
    DpGrid(0.1, 0.1, 1.0)
    DpGrid(0.05, 0.1, 1.0)  # finer wages than efforts is fine
    with pytest.raises(ValueError):
        DpGrid(0.1, 0.05, 1.0)  # efforts off the wage grid
    with pytest.raises(ValueError):
        DpGrid(0.3, 0.3, 1.0)  # does not divide evenly
    grid = DpGrid()
    assert grid.wages[0] == 0.0 and grid.wages[-1] == 1.0
    assert grid.efforts[0] == 0.0 and grid.efforts[-1] == 1.0


def test_wrong_family_rejected():
    with pytest.raises(ValueError):
        solve_policy(CONTRACT, WorkerPrefs.additive(delta=0.9), T10)


def test_bellman_consistency(policy):
    """Recompute the maximized objective at every state; must equal the value."""
    g = policy.grid
    w = g.wages
    e = g.efforts
    p, alpha, delta = CONTRACT.p, CONTRACT.alpha, PREFS.delta
    gamma, beta = PREFS.gamma, PREFS.beta
    V_next = np.zeros(len(w))
    for t in range(T10.T, 0, -1):
        for i, wage in enumerate(w):
            best = -np.inf
            for ee in e:
                c_eval = max(wage + alpha * (ee - wage), 0.0)
                val = (1 - ee) ** gamma * (p * c_eval ** beta
                                           + (1 - p) * wage ** beta)
                j = int(round(ee / g.wage_step))
                val += delta * (p * V_next[j] + (1 - p) * V_next[i])
                best = max(best, val)
            assert policy.value[t - 1, i] == pytest.approx(best, abs=1e-12)
        V_next = policy.value[t - 1]


def test_resolve_is_bit_identical(policy):
    again = solve_policy(CONTRACT, PREFS, T10)
    assert np.array_equal(again.table, policy.table)
    assert np.array_equal(again.value, policy.value)


def test_effort_grid_refinement_weakly_improves(policy):
    fine = solve_policy(CONTRACT, PREFS, T10, DpGrid(0.05, 0.05, 1.0))
    coarse_idx = [int(round(w / 0.05)) for w in policy.grid.wages]
    v_fine = fine.value[0, coarse_idx]
    assert np.all(v_fine >= policy.value[0] - 1e-9)


def test_no_monitoring_means_no_effort():
    lazy = solve_policy(ContractParams(0.0, 0.1, 0.4), PREFS, T10)
    assert np.all(lazy.table == 0.0)


def test_lower_leisure_weight_raises_effort(policy):
    # monotone at every positive-wage state; at w = 0 the all-in corner e = 1
    # yields zero current utility, which a low-leisure-weight worker values
    # less than working 0.9 for the immediate bonus, so that row may fall
    greedy = solve_policy(CONTRACT,
                          WorkerPrefs.cobb_douglas(delta=0.9, gamma=0.05, beta=0.6),
                          T10)
    assert np.all(greedy.table[:, 1:] >= policy.table[:, 1:] - 1e-12)


def test_terminal_period_behavior(policy):
    # with lagged consumption, final-period effort is worthless at positive
    # wages but a zero-wage worker still works for the immediate bonus
    final = policy.table[-1]
    assert final[0] > 0.0
    assert np.all(final[1:] == 0.0)


def test_policy_lookup_and_errors(policy):
    assert policy.effort(5, 0.4) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        policy.effort(0, 0.4)
    with pytest.raises(ValueError):
        policy.effort(1, 0.45)  # off the grid


def test_monotonicity_report(policy):
    report = policy_monotonicity_report(policy)
    assert all(report.decreasing_in_wage)
    assert all(report.decreasing_over_periods)
    assert report.checked_rows[0] == pytest.approx(0.1)


def test_monotonicity_report_single_period():
    short = solve_policy(CONTRACT, PREFS, Horizon(1))
    report = policy_monotonicity_report(short)
    assert len(report.decreasing_in_wage) == 1


def test_always_sampled_path_accounting(policy):
    path = always_sampled_path(policy, 0.4)
    assert path.wages == path.efforts
    prev = [0.4] + path.wages[:-1]
    for t in range(10):
        assert path.bonuses[t] == pytest.approx(
            CONTRACT.alpha * (path.efforts[t] - prev[t]), abs=1e-12)
        assert path.totals[t] == pytest.approx(path.wages[t] + path.bonuses[t])
    assert path.totals[0] == pytest.approx(0.62)


def test_constant_policy_fixed_point():
    # when the policy returns the previous wage, the path is flat, bonus-free
    policy = solve_policy(CONTRACT, PREFS, Horizon(3))
    object.__setattr__(policy, "table",
                       np.tile(policy.grid.wages, (3, 1)))
    path = always_sampled_path(policy, 0.4)
    assert path.wages == [0.4, 0.4, 0.4]
    assert path.bonuses == [0.0, 0.0, 0.0]


def test_adapter_vectorizes(policy):
    adapter = TableEffortPolicy(policy)
    wages = np.array([0.0, 0.4, 1.0])
    e = adapter.effort(1, wages)
    assert e.shape == (3,)
    assert adapter.effort(1, 0.4) == policy.effort(1, 0.4)
    nxt = adapter.next_wage_if_evaluated(1, wages)
    assert np.array_equal(nxt, e)
    b = adapter.bonus_if_evaluated(1, 0.4)
    assert b == pytest.approx(CONTRACT.alpha * (policy.effort(1, 0.4) - 0.4))
    with pytest.raises(ValueError):
        adapter.effort(1, 0.42)
