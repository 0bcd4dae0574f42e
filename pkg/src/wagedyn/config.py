"""Scenario configuration: JSON schema, validation, defaults.

A scenario file has sections contract, prefs, firm, horizon, grid, simulation,
experiment. Validation collects every violation (key path plus bound) instead
of stopping at the first, then fills defaults: additive b = 1, employer
discount eta = worker delta, grid steps 0.1, Monte Carlo seed 42 with 100000
paths, firm revenue share 1/k (unit wage scale).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .cobb_douglas import DpGrid
from .params import ContractParams, FirmParams, Horizon, WorkerPrefs

KNOWN_SECTIONS = ("contract", "prefs", "firm", "horizon", "grid", "simulation",
                  "experiment")


class ConfigError(ValueError):
    def __init__(self, errors: list[str]):
        self.errors = errors
        super().__init__("; ".join(errors))


@dataclass(frozen=True)
class Scenario:
    """Validated scenario with constructed parameter objects."""

    raw: dict
    contract: ContractParams | None
    prefs: WorkerPrefs | None
    firm: FirmParams | None
    horizon: Horizon | None
    grid: DpGrid
    seed: int
    n_paths: int
    experiment: dict


def _number(section: dict, key: str, path: str, errors: list[str],
            required: bool = True, default: float | None = None) -> float | None:
    if key not in section:
        if required:
            errors.append(f"{path}.{key}: missing required key")
        return default
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.append(f"{path}.{key}: expected a number, got {value!r}")
        return default
    return float(value)


def validate_config(config: dict | str | Path) -> Scenario:
    """Validate a scenario dict or JSON file; raises ConfigError with the full
    list of violations."""
    if isinstance(config, (str, Path)):
        text = Path(config).read_text(encoding="utf-8")
        try:
            config = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError([f"config: invalid JSON ({exc})"]) from exc
    if not isinstance(config, dict):
        raise ConfigError(["config: top level must be an object"])

    errors: list[str] = []
    for key in config:
        if key not in KNOWN_SECTIONS:
            errors.append(f"{key}: unknown section")

    resolved: dict[str, Any] = {}

    contract = None
    if "contract" in config:
        sec = dict(config["contract"])
        p = _number(sec, "p", "contract", errors)
        alpha = _number(sec, "alpha", "contract", errors)
        w0 = _number(sec, "w0", "contract", errors)
        if p is not None and not 0.0 <= p <= 1.0:
            errors.append(f"contract.p: must be within [0, 1], got {p}")
        if alpha is not None and not 0.0 <= alpha <= 1.0:
            errors.append(f"contract.alpha: must be within [0, 1], got {alpha}")
        if w0 is not None and w0 < 0.0:
            errors.append(f"contract.w0: must be >= 0, got {w0}")
        if not errors:
            contract = ContractParams(p, alpha, w0)
        resolved["contract"] = {"p": p, "alpha": alpha, "w0": w0}

    prefs = None
    if "prefs" in config:
        sec = dict(config["prefs"])
        family = sec.get("family")
        delta = _number(sec, "delta", "prefs", errors)
        if delta is not None and not 0.0 < delta < 1.0:
            errors.append(f"prefs.delta: must be inside (0, 1), got {delta}")
        if family == "additive":
            b = _number(sec, "b", "prefs", errors, required=False, default=1.0)
            if b is not None and b <= 0.0:
                errors.append(f"prefs.b: must be > 0, got {b}")
            if not errors:
                prefs = WorkerPrefs.additive(delta=delta, b=b)
            resolved["prefs"] = {"family": "additive", "delta": delta, "b": b}
        elif family == "cobb_douglas":
            gamma = _number(sec, "gamma", "prefs", errors)
            beta = _number(sec, "beta", "prefs", errors)
            for name, val in (("gamma", gamma), ("beta", beta)):
                if val is not None and val <= 0.0:
                    errors.append(f"prefs.{name}: must be > 0, got {val}")
            if not errors:
                prefs = WorkerPrefs.cobb_douglas(delta=delta, gamma=gamma, beta=beta)
            resolved["prefs"] = {"family": "cobb_douglas", "delta": delta,
                                 "gamma": gamma, "beta": beta}
        else:
            errors.append(f"prefs.family: must be 'additive' or 'cobb_douglas', "
                          f"got {family!r}")

    firm = None
    if "firm" in config:
        sec = dict(config["firm"])
        k = _number(sec, "k", "firm", errors)
        if k is not None and k <= 0.0:
            errors.append(f"firm.k: must be > 0, got {k}")
        lam_default = 1.0 / k if (k is not None and k > 0) else None
        lam = _number(sec, "lambda", "firm", errors, required=False, default=lam_default)
        if lam is not None and not 0.0 < lam <= 1.0:
            errors.append(f"firm.lambda: must be inside (0, 1], got {lam}")
        c = _number(sec, "c", "firm", errors, required=False, default=0.0)
        if c is not None and c < 0.0:
            errors.append(f"firm.c: must be >= 0, got {c}")
        eta_default = resolved.get("prefs", {}).get("delta")
        eta = _number(sec, "eta", "firm", errors, required=False, default=eta_default)
        if eta is None:
            errors.append("firm.eta: missing and no prefs.delta to default to")
        elif not 0.0 < eta <= 1.0:
            errors.append(f"firm.eta: must be inside (0, 1], got {eta}")
        if not errors and None not in (k, lam, c, eta):
            firm = FirmParams(k=k, lam=lam, c=c, eta=eta)
        resolved["firm"] = {"k": k, "lambda": lam, "c": c, "eta": eta}

    horizon = None
    if "horizon" in config:
        sec = dict(config["horizon"])
        T = sec.get("T")
        if isinstance(T, bool) or not isinstance(T, int):
            errors.append(f"horizon.T: expected an integer, got {T!r}")
        elif T < 1:
            errors.append(f"horizon.T: must be >= 1, got {T}")
        else:
            horizon = Horizon(T)
        resolved["horizon"] = {"T": T}

    grid_sec = dict(config.get("grid", {}))
    wage_step = _number(grid_sec, "wage_step", "grid", errors, required=False, default=0.1)
    effort_step = _number(grid_sec, "effort_step", "grid", errors, required=False, default=0.1)
    wage_max = _number(grid_sec, "wage_max", "grid", errors, required=False, default=1.0)
    grid = None
    try:
        grid = DpGrid(wage_step=wage_step, effort_step=effort_step, wage_max=wage_max)
    except ValueError as exc:
        errors.append(f"grid: {exc}")
    resolved["grid"] = {"wage_step": wage_step, "effort_step": effort_step,
                        "wage_max": wage_max}

    sim = dict(config.get("simulation", {}))
    seed = sim.get("seed", 42)
    n_paths = sim.get("n_paths", 100000)
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        errors.append(f"simulation.seed: expected a nonnegative integer, got {seed!r}")
    if isinstance(n_paths, bool) or not isinstance(n_paths, int) or n_paths < 1:
        errors.append(f"simulation.n_paths: expected an integer >= 1, got {n_paths!r}")
    resolved["simulation"] = {"seed": seed, "n_paths": n_paths}

    experiment = dict(config.get("experiment", {}))
    resolved["experiment"] = experiment

    if errors:
        raise ConfigError(errors)
    return Scenario(raw=resolved, contract=contract, prefs=prefs, firm=firm,
                    horizon=horizon, grid=grid, seed=seed, n_paths=n_paths,
                    experiment=experiment)


def resolved_json(scenario: Scenario) -> str:
    """Canonical JSON echo of the fully resolved scenario."""
    return json.dumps(scenario.raw, indent=2, sort_keys=True) + "\n"
