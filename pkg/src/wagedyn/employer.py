"""Employer-side optimization: profit evaluation, the one-period optimum rules,
grid search, and technology experiments.

Profit per period is expected output k*E(e_t) minus expected compensation and
monitoring cost p*c, discounted by eta. Compensation is the worker's total
compensation: the wage alone under the additive scheme, wage plus nonrecurrent
bonus under the Cobb-Douglas scheme.

A structural warning, verified numerically and by hand: the one-period rules
(alpha*, p*, w0*) are the unique interior stationary point of the profit
function, but that point is a saddle. The profit is linear in w0 at fixed
(p, alpha), and without a worker participation constraint the global argmax
over the full contract box is a degenerate corner (near-zero base pay, or a
huge never-paid wage anchor with p = 1 that confiscates the whole wage via the
penalty). grid_search_optimum therefore reports those corners; the technology
experiments use the stationary rules, which is what the reference results
describe. See stationary_one_period_optimum for the scale-aware rules.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .additive import AffineEffortPolicy, phi_series_recursive, solve_backward_induction
from .cobb_douglas import DpGrid, TableEffortPolicy, solve_policy
from .distribution import WageDistribution
from .params import ContractParams, FirmParams, Horizon, UtilityFamily, WorkerPrefs


class SolveMethod(enum.Enum):
    ANALYTIC = "analytic"
    GRID_SEARCH = "grid_search"


@dataclass(frozen=True)
class OptimalContract:
    contract: ContractParams
    profit: float
    method: SolveMethod
    flags: tuple[str, ...] = ()
    # unclamped rule values, kept even when they leave the admissible box
    raw_alpha: float | None = None
    raw_p: float | None = None
    raw_w0: float | None = None


# ---------------------------------------------------------------------------
# worker best response and profit


def _additive_response(contract: ContractParams, prefs: WorkerPrefs,
                       horizon: Horizon, wage_scale: float):
    """Effort policy for the additive worker; exact recursion when the affine
    policy never clamps on reachable states, numerical DP otherwise."""
    p, alpha, b = contract.p, contract.alpha, prefs.b
    s = wage_scale
    phi = phi_series_recursive(contract, prefs, horizon)
    A = alpha / (1.0 + alpha)
    # reachable wages: w0 plus the per-period evaluated wages
    wages = [contract.w0] + [(p / b) * (1.0 + alpha) * s * ph for ph in phi]
    unclamped = all(0.0 <= (p / b) * ph + A * w / s <= 1.0
                    for ph in phi for w in wages)
    if unclamped:
        return _RecursiveAffinePolicy(contract, prefs, horizon, s, phi)
    grid = np.linspace(0.0, max(1.5, s * (1.0 + alpha), contract.w0 * 1.01), 241)
    sol = solve_backward_induction(contract, prefs, horizon, wage_grid=grid,
                                   effort_tolerance=1e-9, wage_scale=s)
    return AffineEffortPolicy(sol)


class _RecursiveAffinePolicy:
    """Affine additive policy built from the exact phi recursion."""

    def __init__(self, contract, prefs, horizon, wage_scale, phi):
        self.contract = contract
        self.prefs = prefs
        self.horizon = horizon
        self.wage_scale = wage_scale
        self.phi = phi

    def effort(self, t: int, prev_wage):
        c = self.contract
        w = np.asarray(prev_wage, dtype=float)
        if c.p == 0.0:
            return np.zeros_like(w)
        e = (c.p / self.prefs.b) * self.phi[t - 1] \
            + c.alpha / (1.0 + c.alpha) * w / self.wage_scale
        return np.clip(e, 0.0, 1.0)

    def next_wage_if_evaluated(self, t: int, prev_wage):
        c = self.contract
        w = np.asarray(prev_wage, dtype=float)
        e = self.effort(t, prev_wage)
        return np.maximum(self.wage_scale * (1.0 + c.alpha) * e - c.alpha * w, 0.0)

    def bonus_if_evaluated(self, t: int, prev_wage):
        return np.zeros_like(np.asarray(prev_wage, dtype=float))


def worker_policy(contract: ContractParams, prefs: WorkerPrefs, horizon: Horizon,
                  firm: FirmParams, cd_grid: DpGrid | None = None):
    """Best-response policy for either utility family under wage scale lam*k."""
    if prefs.family is UtilityFamily.ADDITIVE:
        return _additive_response(contract, prefs, horizon, firm.wage_scale)
    grid = cd_grid or DpGrid()
    return TableEffortPolicy(solve_policy(contract, prefs, horizon, grid))


def expected_profit(contract: ContractParams, firm: FirmParams, prefs: WorkerPrefs,
                    horizon: Horizon, policy=None) -> float:
    """Discounted expected profit over the exact wage distribution.

    Degenerate additive contracts (w0 = 0 with p < 1, or no effort with
    positive evaluated consumption) yield -inf.
    """
    if policy is None:
        if prefs.family is UtilityFamily.ADDITIVE and (contract.w0 <= 0.0 and contract.p < 1.0):
            return -math.inf
        try:
            policy = worker_policy(contract, prefs, horizon, firm)
        except ValueError:
            return -math.inf
    p = contract.p
    dist = WageDistribution.point_mass(contract.w0)
    total = 0.0
    for t in range(1, horizon.T + 1):
        efforts = np.asarray(policy.effort(t, dist.support), dtype=float)
        output = firm.k * float(np.dot(efforts, dist.probs))
        comp_eval = (np.asarray(policy.next_wage_if_evaluated(t, dist.support), dtype=float)
                     + np.asarray(policy.bonus_if_evaluated(t, dist.support), dtype=float))
        wage_cost = p * float(np.dot(comp_eval, dist.probs)) \
            + (1.0 - p) * float(np.dot(dist.support, dist.probs))
        total += firm.eta ** (t - 1) * (output - wage_cost - p * firm.c)
        dist = _step(dist, policy, contract, t)
    return total


def _step(dist: WageDistribution, policy, contract: ContractParams, t: int) -> WageDistribution:
    nxt = np.asarray(policy.next_wage_if_evaluated(t, dist.support), dtype=float)
    pairs = []
    if contract.p < 1.0:
        pairs.extend(zip(dist.support.tolist(), (dist.probs * (1.0 - contract.p)).tolist()))
    if contract.p > 0.0:
        pairs.extend(zip(np.atleast_1d(nxt).tolist(), (dist.probs * contract.p).tolist()))
    return WageDistribution.from_pairs(pairs)


def profit_by_history_enumeration(contract: ContractParams, firm: FirmParams,
                                  prefs: WorkerPrefs, horizon: Horizon,
                                  policy=None) -> float:
    """Independent profit computation summing over all 2^T sampling histories."""
    T = horizon.T
    if T > 20:
        raise ValueError("history enumeration refuses T > 20")
    if policy is None:
        policy = worker_policy(contract, prefs, horizon, firm)
    p = contract.p
    total = 0.0
    for mask in range(1 << T):
        prob = 1.0
        w = contract.w0
        contrib = 0.0
        for t in range(1, T + 1):
            e = float(policy.effort(t, w))
            sampled = bool(mask >> (t - 1) & 1)
            if sampled:
                prob *= p
                wage = float(policy.next_wage_if_evaluated(t, w))
                comp = wage + float(policy.bonus_if_evaluated(t, w))
                w_next = wage
            else:
                prob *= 1.0 - p
                comp = w
                w_next = w
            contrib += firm.eta ** (t - 1) * (firm.k * e - comp - p * firm.c)
            w = w_next
        if prob > 0.0:
            total += prob * contrib
    return total


# ---------------------------------------------------------------------------
# one-period optimum rules


def analytic_one_period_optimum(firm: FirmParams) -> OptimalContract:
    """One-period optimum rules for the unit wage scale (lam*k = 1), additive
    worker with b = 1:

        alpha* = sqrt(k*c)/(k-1) - 1
        p*     = 1 - alpha*/(1+alpha*) * k
        w0*    = [(1+alpha*) * p*]^2 / k

    Values outside [0,1]^2 x [0, inf) are flagged, not clamped in the raw
    fields. Raises for k = 1 where the alpha* rule divides by zero, and for
    firms whose wage scale is not 1 (set lam = 1/k).
    """
    k, c = firm.k, firm.c
    if k == 1.0:
        raise ValueError("one-period optimum rules are singular at k = 1")
    if abs(firm.wage_scale - 1.0) > 1e-12:
        raise ValueError("one-period optimum rules assume unit wage scale; set lam = 1/k")
    alpha = math.sqrt(k * c) / (k - 1.0) - 1.0
    p = 1.0 - alpha / (1.0 + alpha) * k
    w0 = ((1.0 + alpha) * p) ** 2 / k
    flags = []
    if not 0.0 <= alpha <= 1.0:
        flags.append("alpha_out_of_range")
    if not 0.0 <= p <= 1.0:
        flags.append("p_out_of_range")
    if w0 < 0.0:
        flags.append("w0_out_of_range")
    contract = ContractParams(min(max(p, 0.0), 1.0), min(max(alpha, 0.0), 1.0),
                              max(w0, 0.0))
    profit = _one_period_profit(contract.p, contract.alpha, contract.w0, firm) \
        if not flags else math.nan
    return OptimalContract(contract=contract, profit=profit, method=SolveMethod.ANALYTIC,
                           flags=tuple(flags), raw_alpha=alpha, raw_p=p, raw_w0=w0)


def stationary_one_period_optimum(firm: FirmParams) -> OptimalContract:
    """Scale-aware one-period stationarity rules under wage scale s = lam*k.

    Interior solution: with m = 1 - sqrt(c/k),
        p*      = m*(1-lam) / (lam*(1-m))
        1+alpha*= 1 / (1 - lam*(1-p*))
        w0*     = k*m^2.
    Reduces exactly to the unit-scale rules when lam*k = 1. When alpha* leaves
    [0, 1] the binding bound is imposed and the remaining two first-order
    conditions re-solved; boundary solutions are flagged.
    """
    k, c, lam = firm.k, firm.c, firm.lam
    s = firm.wage_scale
    if c >= k:
        # inducing any effort costs more than it yields; shut monitoring down
        contract = ContractParams(0.0, 0.0, 0.0)
        return OptimalContract(contract, 0.0, SolveMethod.ANALYTIC, ("no_monitoring",))
    m = 1.0 - math.sqrt(c / k)
    flags: list[str] = []
    if lam >= 1.0:
        # the worker captures the whole marginal product; effort is worthless
        p, alpha, w0 = 0.0, 0.0, 0.0
        flags.append("degenerate_full_share")
    else:
        p = m * (1.0 - lam) / (lam * (1.0 - m))
        if p > 1.0:
            flags.append("p_out_of_range")
            p = 1.0
        alpha = 1.0 / (1.0 - lam * (1.0 - p)) - 1.0
        w0 = k * m * m
        if alpha > 1.0:
            # alpha bound binds: p from the w0 condition, w0 from the p condition
            alpha = 1.0
            p = 1.0 - 0.5 / lam
            if p < 0.0:
                flags.append("p_out_of_range")
                p = 0.0
            w0 = 4.0 * s * p - k + c
            flags.append("alpha_at_upper_bound")
    if w0 < 0.0:
        flags.append("w0_out_of_range")
        w0 = 0.0
    contract = ContractParams(p, alpha, w0)
    profit = _one_period_profit(p, alpha, w0, firm)
    return OptimalContract(contract, profit, SolveMethod.ANALYTIC, tuple(flags))


def _one_period_profit(p: float, alpha: float, w0: float, firm: FirmParams,
                       b: float = 1.0) -> float:
    """Exact one-period profit with the additive worker's clamped response."""
    s = firm.wage_scale
    if w0 <= 0.0 and p < 1.0:
        return -math.inf
    if p == 0.0:
        e = 0.0
        x = 0.0
    else:
        cap = s * (1.0 + alpha) - alpha * w0  # evaluated consumption at e = 1
        if cap <= 0.0:
            # no effort yields positive evaluated consumption; no reason to work
            e, x = 0.0, 0.0
        else:
            e = min(p / b + alpha * w0 / ((1.0 + alpha) * s), 1.0)
            x = max(s * (1.0 + alpha) * e - alpha * w0, 0.0)
    return firm.k * e - (p * x + (1.0 - p) * w0 + p * firm.c)


def _one_period_profit_row(p: float, alpha: float, w0: np.ndarray,
                           firm: FirmParams, b: float = 1.0) -> np.ndarray:
    """Vectorized _one_period_profit over a base-wage axis."""
    s = firm.wage_scale
    w0 = np.asarray(w0, dtype=float)
    if p == 0.0:
        e = np.zeros_like(w0)
        x = np.zeros_like(w0)
    else:
        cap = s * (1.0 + alpha) - alpha * w0
        e = np.minimum(p / b + alpha * w0 / ((1.0 + alpha) * s), 1.0)
        x = np.maximum(s * (1.0 + alpha) * e - alpha * w0, 0.0)
        dead = cap <= 0.0
        e = np.where(dead, 0.0, e)
        x = np.where(dead, 0.0, x)
    out = firm.k * e - (p * x + (1.0 - p) * w0 + p * firm.c)
    if p < 1.0:
        out = np.where(w0 <= 0.0, -math.inf, out)
    return out


# ---------------------------------------------------------------------------
# grid search


@dataclass(frozen=True)
class GridSteps:
    p_step: float = 0.02
    alpha_step: float = 0.02
    w0_step: float = 0.02
    w0_max: float | None = None  # default lam*k*(1 + alpha_max)


def grid_search_optimum(firm: FirmParams, prefs: WorkerPrefs, horizon: Horizon,
                        steps: GridSteps = GridSteps(), refine_rounds: int = 2) -> OptimalContract:
    """Argmax of expected_profit over the contract box, ties broken
    lexicographically by (p, alpha, w0) ascending; optional local refinement
    halves the steps around the incumbent.

    One-period additive searches use the exact closed-form profit; other
    cases evaluate expected_profit per cell.
    """
    w0_max = steps.w0_max if steps.w0_max is not None else firm.wage_scale * 2.0

    def axis(lo, hi, step):
        n = int(math.floor((hi - lo) / step + 1e-9))
        return np.round(np.linspace(lo, lo + n * step, n + 1), 12)

    fast = prefs.family is UtilityFamily.ADDITIVE and horizon.T == 1

    def scan(p_vals, a_vals, w_vals):
        best = (-math.inf, None)
        w_arr = np.asarray(w_vals, dtype=float)
        for p in p_vals:
            for a in a_vals:
                if fast:
                    row = _one_period_profit_row(float(p), float(a), w_arr, firm,
                                                 b=prefs.b)
                    i = int(np.argmax(row))  # first max = smallest w0 on ties
                    pi, w = float(row[i]), float(w_arr[i])
                    if pi > best[0]:
                        best = (pi, (float(p), float(a), w))
                else:
                    for w in w_vals:
                        contract = ContractParams(float(p), float(a), float(w))
                        pi = expected_profit(contract, firm, prefs, horizon)
                        if pi > best[0]:
                            best = (pi, (float(p), float(a), float(w)))
        return best

    p_vals = axis(0.0, 1.0, steps.p_step)
    a_vals = axis(0.0, 1.0, steps.alpha_step)
    w_vals = axis(0.0, w0_max, steps.w0_step)
    best_profit, best_cell = scan(p_vals, a_vals, w_vals)

    h = np.array([steps.p_step, steps.alpha_step, steps.w0_step])
    for _ in range(refine_rounds):
        h = h / 2.0
        p0, a0, w0 = best_cell
        p_vals = np.clip(p0 + h[0] * np.arange(-3, 4), 0.0, 1.0)
        a_vals = np.clip(a0 + h[1] * np.arange(-3, 4), 0.0, 1.0)
        w_vals = np.clip(w0 + h[2] * np.arange(-3, 4), 0.0, w0_max)
        profit, cell = scan(np.unique(p_vals), np.unique(a_vals), np.unique(w_vals))
        if profit > best_profit:
            best_profit, best_cell = profit, cell

    p, a, w = best_cell
    flags = []
    for name, val, lo, hi in (("p", p, 0.0, 1.0), ("alpha", a, 0.0, 1.0),
                              ("w0", w, 0.0, w0_max)):
        if val in (lo, hi):
            flags.append(f"{name}_at_bound")
    return OptimalContract(ContractParams(p, a, w), best_profit,
                           SolveMethod.GRID_SEARCH, tuple(flags))


# ---------------------------------------------------------------------------
# technology experiments


@dataclass(frozen=True)
class SweepRow:
    k: float
    contract: ContractParams
    profit: float
    flags: tuple[str, ...]
    effort: float
    wage_mean: float
    wage_variance: float
    std_over_mean: float


def tech_sweep(k_values, firm_template: FirmParams, prefs: WorkerPrefs | None = None,
               horizon: Horizon = Horizon(1)) -> list[SweepRow]:
    """One-period optimum outcomes across marginal products k.

    Contracts come from the stationary rules under wage scale lam*k; worker
    outcomes are the implied two-point wage distribution.
    """
    rows = []
    for k in k_values:
        firm = FirmParams(k=float(k), lam=firm_template.lam, c=firm_template.c,
                          eta=firm_template.eta)
        opt = stationary_one_period_optimum(firm)
        p, a, w0 = opt.contract.p, opt.contract.alpha, opt.contract.w0
        s = firm.wage_scale
        e = min(p + a * w0 / ((1.0 + a) * s), 1.0)
        x = max(s * (1.0 + a) * e - a * w0, 0.0)
        mean = p * x + (1.0 - p) * w0
        var = p * (1.0 - p) * (x - w0) ** 2
        rows.append(SweepRow(k=float(k), contract=opt.contract, profit=opt.profit,
                             flags=opt.flags, effort=e, wage_mean=mean,
                             wage_variance=var,
                             std_over_mean=math.sqrt(var) / mean if mean > 0 else math.nan))
    return rows


@dataclass(frozen=True)
class TechShockReport:
    firm_before: FirmParams
    firm_after: FirmParams
    contract_before: ContractParams
    contract_after: ContractParams
    profile_before: "ProfileDetail"
    profile_after: "ProfileDetail"
    turnover: list[bool]  # per period: incumbent costs more than a fresh hire


@dataclass(frozen=True)
class ProfileDetail:
    mean: np.ndarray
    variance: np.ndarray
    expected_output: np.ndarray
    employment_cost: np.ndarray  # wage expectancy minus expected marginal output


def _contract_profile(contract: ContractParams, firm: FirmParams, prefs: WorkerPrefs,
                      horizon: Horizon) -> ProfileDetail:
    policy = worker_policy(contract, prefs, horizon, firm)
    dists = [WageDistribution.point_mass(contract.w0)]
    for t in range(1, horizon.T + 1):
        dists.append(_step(dists[-1], policy, contract, t))
    means, variances, outputs = [], [], []
    for t in range(1, horizon.T + 1):
        pre = dists[t - 1]
        efforts = np.asarray(policy.effort(t, pre.support), dtype=float)
        outputs.append(firm.k * float(np.dot(efforts, pre.probs)))
        means.append(dists[t].mean())
        variances.append(dists[t].variance())
    means = np.array(means)
    variances = np.array(variances)
    outputs = np.array(outputs)
    return ProfileDetail(means, variances, outputs, means - outputs)


def tech_shock(firm_before: FirmParams, firm_after: FirmParams, prefs: WorkerPrefs,
               horizon: Horizon) -> TechShockReport:
    """Before/after profiles under the stationary optimal contracts.

    The turnover indicator marks periods where an incumbent under the new
    technology costs more (wage expectancy minus expected output) than a fresh
    period-1 worker, with zero training cost.
    """
    if not firm_after.k > firm_before.k:
        raise ValueError("the shock must raise k")
    c_before = stationary_one_period_optimum(firm_before).contract
    c_after = stationary_one_period_optimum(firm_after).contract
    prof_before = _contract_profile(c_before, firm_before, prefs, horizon)
    prof_after = _contract_profile(c_after, firm_after, prefs, horizon)
    fresh_cost = prof_after.employment_cost[0]
    turnover = [bool(cost > fresh_cost + 1e-12) for cost in prof_after.employment_cost]
    return TechShockReport(firm_before, firm_after, c_before, c_after,
                           prof_before, prof_after, turnover)
