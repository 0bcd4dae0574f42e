"""Grid-based backward induction for the Cobb-Douglas worker.

Compensation scheme: an evaluation resets the wage state to the current
effort, and pays a nonrecurrent bonus alpha*(e - w_prev) that enters
consumption only. Within an evaluated period the worker consumes the wage in
force before the evaluation plus the bonus; the reset wage is consumed from
the next period on. This timing is what the reference policy tables encode:
it makes final-period effort worthless at positive wages (the whole terminal
column collapses to zero) while a zero-wage worker still works for the bonus.

The effort grid must live on the wage grid so the state space stays closed
without interpolation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ContractParams, Horizon, UtilityFamily, WorkerPrefs


@dataclass(frozen=True)
class DpGrid:
    wage_step: float = 0.1
    effort_step: float = 0.1
    wage_max: float = 1.0

    def __post_init__(self) -> None:
        if self.wage_step <= 0.0 or self.effort_step <= 0.0:
            raise ValueError("grid steps must be positive")
        n_w = self.wage_max / self.wage_step
        if abs(n_w - round(n_w)) > 1e-9:
            raise ValueError("wage_step must divide wage_max evenly")
        ratio = self.effort_step / self.wage_step
        if abs(ratio - round(ratio)) > 1e-9 or round(ratio) < 1:
            raise ValueError("effort_step must be an integer multiple of wage_step "
                             "so every effort is a wage-grid point")

    @property
    def wages(self) -> np.ndarray:
        n = int(round(self.wage_max / self.wage_step))
        return np.round(np.linspace(0.0, self.wage_max, n + 1), 12)

    @property
    def efforts(self) -> np.ndarray:
        n = int(round(1.0 / self.effort_step))
        return np.round(np.linspace(0.0, 1.0, n + 1), 12)


@dataclass(frozen=True)
class EffortPolicy:
    """Optimal effort table and value function on the joint grid.

    table[t-1, i] is the period-t effort at previous wage wages[i]; value has
    the same layout.
    """

    contract: ContractParams
    prefs: WorkerPrefs
    horizon: Horizon
    grid: DpGrid
    table: np.ndarray
    value: np.ndarray

    def effort(self, t: int, prev_wage: float) -> float:
        if not 1 <= t <= self.horizon.T:
            raise ValueError(f"period {t} outside 1..{self.horizon.T}")
        return float(self.table[t - 1, self._index(prev_wage)])

    def _index(self, wage: float) -> int:
        i = int(round(wage / self.grid.wage_step))
        if not 0 <= i < len(self.grid.wages) or abs(wage - self.grid.wages[i]) > 1e-9:
            raise ValueError(f"wage {wage} is not on the policy grid")
        return i


def solve_policy(contract: ContractParams, prefs: WorkerPrefs, horizon: Horizon,
                 grid: DpGrid | None = None) -> EffortPolicy:
    """Backward induction over the wage grid.

    V_t(w) = max_e (1-e)^gamma * [p*c_eval^beta + (1-p)*w^beta]
             + delta * [p*V_{t+1}(e) + (1-p)*V_{t+1}(w)],
    c_eval = max(w + alpha*(e - w), 0), terminal continuation 0. Argmax ties
    break toward the smaller effort.
    """
    if prefs.family is not UtilityFamily.COBB_DOUGLAS:
        raise ValueError("solve_policy requires the Cobb-Douglas utility family")
    grid = grid or DpGrid()
    w = grid.wages
    e = grid.efforts
    p, alpha, delta = contract.p, contract.alpha, prefs.delta
    gamma, beta = prefs.gamma, prefs.beta
    T = horizon.T

    W = w[None, :]  # previous wage axis 1
    E = e[:, None]  # effort axis 0
    c_eval = np.maximum(W + alpha * (E - W), 0.0)
    leisure = (1.0 - E) ** gamma
    u_eval = leisure * c_eval ** beta
    u_keep = leisure * W ** beta
    reward = p * u_eval + (1.0 - p) * u_keep

    # index of each effort on the wage grid (next state after evaluation)
    e_idx = np.round(e / grid.wage_step).astype(int)
    e_idx = np.clip(e_idx, 0, len(w) - 1)

    table = np.zeros((T, len(w)))
    value = np.zeros((T, len(w)))
    V_next = np.zeros(len(w))
    for t in range(T, 0, -1):
        cont = delta * (p * V_next[e_idx][:, None] + (1.0 - p) * V_next[None, :])
        obj = reward + cont
        best = np.argmax(obj, axis=0)  # first max = smallest effort on ties
        table[t - 1] = e[best]
        value[t - 1] = obj[best, np.arange(len(w))]
        V_next = value[t - 1]
    return EffortPolicy(contract=contract, prefs=prefs, horizon=horizon,
                        grid=grid, table=table, value=value)


@dataclass(frozen=True)
class SampledPath:
    efforts: list[float]
    wages: list[float]
    bonuses: list[float]
    totals: list[float]


def always_sampled_path(policy: EffortPolicy, w0: float) -> SampledPath:
    """Trace the path of a worker evaluated every period from base wage w0.

    Reported wage is the reset wage (the effort), bonus is alpha*(e - w_prev),
    total is their sum.
    """
    alpha = policy.contract.alpha
    efforts, wages, bonuses, totals = [], [], [], []
    w = w0
    for t in range(1, policy.horizon.T + 1):
        e = policy.effort(t, w)
        b = alpha * (e - w)
        efforts.append(e)
        wages.append(e)
        bonuses.append(b)
        totals.append(e + b)
        w = e
    return SampledPath(efforts, wages, bonuses, totals)


@dataclass(frozen=True)
class MonotonicityReport:
    decreasing_in_wage: list[bool]          # per period t = 1..T
    decreasing_over_periods: list[bool]     # per wage row, restricted rows only
    checked_rows: list[float]


def policy_monotonicity_report(policy: EffortPolicy,
                               min_row: float = 0.1) -> MonotonicityReport:
    """Weak monotonicity of effort in previous wage and over periods."""
    tab = policy.table
    in_wage = [bool(np.all(np.diff(tab[t]) <= 1e-12)) for t in range(tab.shape[0])]
    rows = [float(x) for x in policy.grid.wages if x >= min_row - 1e-12]
    over_t = []
    for x in rows:
        i = policy._index(x)
        over_t.append(bool(np.all(np.diff(tab[:, i]) <= 1e-12)))
    return MonotonicityReport(in_wage, over_t, rows)


class TableEffortPolicy:
    """Distribution-engine adapter: next wage is the effort itself, bonus is
    the nonrecurrent alpha*(e - w_prev)."""

    def __init__(self, policy: EffortPolicy):
        self.policy = policy
        self.contract = policy.contract
        self.horizon = policy.horizon

    def _efforts(self, t: int, prev_wage):
        w = np.atleast_1d(np.asarray(prev_wage, dtype=float))
        idx = np.round(w / self.policy.grid.wage_step).astype(int)
        if np.any(np.abs(w - self.policy.grid.wages[np.clip(idx, 0, len(self.policy.grid.wages) - 1)]) > 1e-9):
            raise ValueError("wage off the policy grid")
        return self.policy.table[t - 1, idx]

    def effort(self, t: int, prev_wage):
        out = self._efforts(t, prev_wage)
        return out if np.ndim(prev_wage) else float(out[0])

    def next_wage_if_evaluated(self, t: int, prev_wage):
        out = self._efforts(t, prev_wage)
        return out if np.ndim(prev_wage) else float(out[0])

    def bonus_if_evaluated(self, t: int, prev_wage):
        w = np.atleast_1d(np.asarray(prev_wage, dtype=float))
        out = self.contract.alpha * (self._efforts(t, prev_wage) - w)
        return out if np.ndim(prev_wage) else float(out[0])
