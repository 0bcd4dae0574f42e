"""Parameter bundles shared by every solver.

All types are frozen dataclasses validated at construction; instances are
immutable and safe to share across threads.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class UtilityFamily(enum.Enum):
    ADDITIVE = "additive"
    COBB_DOUGLAS = "cobb_douglas"


@dataclass(frozen=True)
class ContractParams:
    """Employer's offer: evaluation probability, bonus/penalty rate, base wage."""

    p: float
    alpha: float
    w0: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"contract.p must be within [0, 1], got {self.p}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"contract.alpha must be within [0, 1], got {self.alpha}")
        if not self.w0 >= 0.0:
            raise ValueError(f"contract.w0 must be >= 0, got {self.w0}")


@dataclass(frozen=True)
class WorkerPrefs:
    """Utility family plus its parameters.

    Additive: u(c, e) = ln(c) - b*e.
    Cobb-Douglas: u(c, e) = (1 - e)^gamma * c^beta.
    Family-inappropriate parameters must be None.
    """

    family: UtilityFamily
    delta: float
    b: float | None = None
    gamma: float | None = None
    beta: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"prefs.delta must be inside (0, 1), got {self.delta}")
        if self.family is UtilityFamily.ADDITIVE:
            if self.b is None or not self.b > 0.0:
                raise ValueError(f"prefs.b must be > 0 for the additive family, got {self.b}")
            if self.gamma is not None or self.beta is not None:
                raise ValueError("prefs.gamma/prefs.beta must be absent for the additive family")
        else:
            if self.gamma is None or not self.gamma > 0.0:
                raise ValueError(f"prefs.gamma must be > 0, got {self.gamma}")
            if self.beta is None or not self.beta > 0.0:
                raise ValueError(f"prefs.beta must be > 0, got {self.beta}")
            if self.b is not None:
                raise ValueError("prefs.b must be absent for the Cobb-Douglas family")

    @staticmethod
    def additive(delta: float, b: float = 1.0) -> "WorkerPrefs":
        return WorkerPrefs(family=UtilityFamily.ADDITIVE, delta=delta, b=b)

    @staticmethod
    def cobb_douglas(delta: float, gamma: float, beta: float) -> "WorkerPrefs":
        return WorkerPrefs(family=UtilityFamily.COBB_DOUGLAS, delta=delta,
                           gamma=gamma, beta=beta)


@dataclass(frozen=True)
class FirmParams:
    """Production and monitoring side: f(e) = k*e, wage scale lam*k,
    per-evaluation cost c, employer discount eta."""

    k: float
    lam: float
    c: float
    eta: float

    def __post_init__(self) -> None:
        if not self.k > 0.0:
            raise ValueError(f"firm.k must be > 0, got {self.k}")
        if not 0.0 < self.lam <= 1.0:
            raise ValueError(f"firm.lam must be inside (0, 1], got {self.lam}")
        if not self.c >= 0.0:
            raise ValueError(f"firm.c must be >= 0, got {self.c}")
        if not 0.0 < self.eta <= 1.0:
            raise ValueError(f"firm.eta must be inside (0, 1], got {self.eta}")

    @property
    def wage_scale(self) -> float:
        return self.lam * self.k


@dataclass(frozen=True)
class Horizon:
    """Number of work periods."""

    T: int

    def __post_init__(self) -> None:
        if not (isinstance(self.T, int) and self.T >= 1):
            raise ValueError(f"horizon.T must be an integer >= 1, got {self.T}")
