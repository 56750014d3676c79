"""Required transmit power for SISO, DF-relay and IRS-aided transmission.

All computations are in watts; dBm appears only at presentation
boundaries. ``rate`` is the target spectral efficiency in bits/sec/Hz,
``noise_w`` the receiver noise power in watts, and the ``beta_*``
arguments are linear channel gains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .scenario import LinkBudget

Targets = Literal["df", "siso", "both"]

N_SEARCH_CAP = 10 ** 6


class ElementSearchCapError(RuntimeError):
    """No element count within the search cap undercuts the target power."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"no element count N <= {cap} beats the target power")


def watts_to_dbm(power_w: float) -> float:
    if power_w <= 0.0:
        raise ValueError(f"power must be > 0 W, got {power_w!r}")
    return 30.0 + 10.0 * math.log10(power_w)


def dbm_to_watts(power_dbm: float) -> float:
    return 10.0 ** ((power_dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class IrsConfig:
    """Element count and amplitude reflection coefficient of the surface."""

    n_elements: int
    alpha: float = 1.0

    def __post_init__(self):
        if not isinstance(self.n_elements, int) or isinstance(self.n_elements, bool):
            raise ValueError(f"n_elements must be an integer, got {self.n_elements!r}")
        if self.n_elements < 0:
            raise ValueError(f"n_elements must be >= 0, got {self.n_elements!r}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha!r}")


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise ValueError(f"{name} must be > 0, got {value!r}")


def p_siso(rate: float, noise_w: float, beta_sd: float) -> float:
    """Power for direct transmission: (2^rate - 1) * noise / beta_sd."""
    if rate < 0.0:
        raise ValueError(f"rate must be >= 0, got {rate!r}")
    _require_positive(noise_w=noise_w, beta_sd=beta_sd)
    return (2.0 ** rate - 1.0) * noise_w / beta_sd


def p_df(rate: float, noise_w: float, beta_sd: float, beta_sr: float,
         beta_rd: float) -> float:
    """Power for two-stage decode-and-forward relaying.

    When the direct link beats the source-relay link (beta_sd > beta_sr)
    the relay cannot help and the cost is the direct-link power at the
    doubled rate; otherwise the combining expression applies.
    """
    if rate < 0.0:
        raise ValueError(f"rate must be >= 0, got {rate!r}")
    _require_positive(noise_w=noise_w, beta_sd=beta_sd, beta_sr=beta_sr,
                      beta_rd=beta_rd)
    pre_log = 2.0 ** (2.0 * rate) - 1.0
    if beta_sd > beta_sr:
        return pre_log * noise_w / beta_sd
    return pre_log * (beta_sr + beta_rd - beta_sd) * noise_w / (2.0 * beta_sr * beta_rd)


def p_irs(rate: float, noise_w: float, beta_sd: float, beta_irs: float,
          irs: IrsConfig) -> float:
    """Power for IRS-aided transmission with N configured elements.

    The N = 0 term is folded away so the result is bit-identical to
    p_siso in that case ((sqrt(beta_sd))^2 would round).
    """
    if rate < 0.0:
        raise ValueError(f"rate must be >= 0, got {rate!r}")
    _require_positive(noise_w=noise_w, beta_sd=beta_sd, beta_irs=beta_irs)
    reflected = irs.n_elements * irs.alpha * math.sqrt(beta_irs)
    if reflected == 0.0:
        denom = beta_sd
    else:
        amplitude = math.sqrt(beta_sd) + reflected
        denom = amplitude * amplitude
    return (2.0 ** rate - 1.0) * noise_w / denom


def n_min_closed_form(p_df_w: float, noise_w: float, beta_sd: float,
                      beta_sr: float, beta_rd: float,
                      alpha: float = 1.0) -> float | None:
    """Real-valued element-count threshold at which IRS power meets p_df_w.

    Returns None when beta_sd > beta_sr: the IRS then needs less power
    than DF relaying for any N >= 1 and no threshold applies. Callers
    integerize as the smallest integer strictly greater than the result.
    """
    _require_positive(p_df_w=p_df_w, noise_w=noise_w, beta_sd=beta_sd,
                      beta_sr=beta_sr, beta_rd=beta_rd, alpha=alpha)
    if beta_sd > beta_sr:
        return None
    inner = math.sqrt(
        1.0 + 2.0 * p_df_w * beta_sr * beta_rd
        / ((beta_sr + beta_rd - beta_sd) * noise_w)
    )
    arg = (inner - 1.0) * noise_w / p_df_w
    if arg < 0.0:
        # Mathematically arg >= 0; tolerate rounding droop only.
        if arg < -1e-12:
            raise ValueError(f"threshold radicand unexpectedly negative: {arg!r}")
        arg = 0.0
    return (math.sqrt(arg) - math.sqrt(beta_sd)) / (
        alpha * math.sqrt(beta_sr * beta_rd)
    )


def n_min_search(rate: float, noise_w: float, budget: LinkBudget,
                 alpha: float = 1.0, targets: Targets = "both",
                 cap: int = N_SEARCH_CAP) -> int:
    """Smallest N >= 1 whose IRS power is strictly below every selected target.

    Exploits that p_irs is strictly decreasing in N: exponential growth to
    bracket the threshold, then bisection. Identical to a linear scan.
    """
    if targets not in ("df", "siso", "both"):
        raise ValueError(f"targets must be 'df', 'siso' or 'both', got {targets!r}")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap!r}")
    beta_sd = budget.beta_sd.linear
    beta_sr = budget.beta_sr.linear
    beta_rd = budget.beta_rd.linear
    beta_irs = budget.beta_irs.linear
    candidates = []
    if targets in ("df", "both"):
        candidates.append(p_df(rate, noise_w, beta_sd, beta_sr, beta_rd))
    if targets in ("siso", "both"):
        candidates.append(p_siso(rate, noise_w, beta_sd))
    target = min(candidates)

    def beats(n: int) -> bool:
        return p_irs(rate, noise_w, beta_sd, beta_irs, IrsConfig(n, alpha)) < target

    if beats(1):
        return 1
    if not beats(cap):
        raise ElementSearchCapError(cap)
    lo, hi = 1, 2
    while hi < cap and not beats(hi):
        lo, hi = hi, min(hi * 2, cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if beats(mid):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class PowerReport:
    """Scheme comparison at one scenario point, in watts with dBm views."""

    p_siso_w: float
    p_df_w: float
    p_irs_w: dict[int, float]  # element count -> watts

    @property
    def p_siso_dbm(self) -> float:
        return watts_to_dbm(self.p_siso_w)

    @property
    def p_df_dbm(self) -> float:
        return watts_to_dbm(self.p_df_w)

    @property
    def p_irs_dbm(self) -> dict[int, float]:
        return {n: watts_to_dbm(w) for n, w in self.p_irs_w.items()}


def compare_schemes(rate: float, noise_w: float, budget: LinkBudget,
                    n_elements: tuple[int, ...] = (25, 50, 80, 150),
                    alpha: float = 1.0) -> PowerReport:
    """PowerReport for one link budget over the given IRS element counts."""
    beta_sd = budget.beta_sd.linear
    return PowerReport(
        p_siso_w=p_siso(rate, noise_w, beta_sd),
        p_df_w=p_df(rate, noise_w, beta_sd, budget.beta_sr.linear,
                    budget.beta_rd.linear),
        p_irs_w={
            n: p_irs(rate, noise_w, beta_sd, budget.beta_irs.linear,
                     IrsConfig(n, alpha))
            for n in sorted(n_elements)
        },
    )
