"""Pricing a bet on the next toss of a coin with unknown bias.

After observing ``x`` heads in ``m`` tosses, the bet paying 1 on the next
head is a gamble over the continuum of biases p in [0, 1].  Its utility
vector has components

    alpha = max_p  l(p) * min(1, exp(logit(p) - c))
    beta  = max_p  l(p) * min(1, exp(c - logit(p)))

where l(p) = p^x (1-p)^(m-x) normalized to 1 at the maximum-likelihood bias
x/m (the binomial coefficient cancels), and the price follows from the
logistic pricing formula.  Likelihoods are evaluated in log space so large
``m`` cannot underflow intermediate products.

The maximizations run on a dense uniform grid refined by golden-section
search around the best bracket.  Both objectives are continuous and smooth
except for one kink where logit(p) crosses the premium, and that point is
probed explicitly; results are deterministic for a fixed grid.

For comparison, three default-prior Bayesian prices of the same bet have
closed forms: the posterior-mean success probabilities (x+1)/(m+2) for a
uniform prior, (x+0.5)/(m+1) for the Jeffreys/reference prior, and x/m for
the Novick-Hall prior.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Literal

import numpy as np

from .gambles import GambleError
from .pricing import UtilityVector, inverse_logit, price_from_vector

__all__ = [
    "GRID_POINTS",
    "REFINE_TOL",
    "BinomialScenario",
    "PricingRow",
    "normalized_binomial_likelihood",
    "continuous_utility_vector",
    "likelihood_price",
    "bayesian_prices",
    "emit_table",
    "golden_section_maximize",
    "format_price",
    "render_table_text",
    "render_table_csv",
    "CSV_HEADER",
]

# Uniform probe grid over [0, 1]; the best bracket is then refined.
GRID_POINTS = 10_001
# Golden-section refinement stops at this bracket width.
REFINE_TOL = 1e-10

CSV_HEADER = "x,likelihood,uniform,jeffreys,novick_hall"


@dataclass(frozen=True)
class BinomialScenario:
    """``trials`` observed tosses with ``successes`` heads, priced at ``premium``."""

    trials: int
    successes: int
    premium: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.trials, int) or isinstance(self.trials, bool) or self.trials < 1:
            raise GambleError(f"trials must be a positive integer, got {self.trials!r}")
        ok = isinstance(self.successes, int) and not isinstance(self.successes, bool)
        if not ok or not (0 <= self.successes <= self.trials):
            raise GambleError(
                f"successes must be an integer in [0, {self.trials}], got {self.successes!r}"
            )
        if not math.isfinite(float(self.premium)):
            raise GambleError(f"premium must be finite, got {self.premium!r}")
        object.__setattr__(self, "premium", float(self.premium))


@dataclass(frozen=True)
class PricingRow:
    """One table row: the likelihood price next to the three Bayesian baselines."""

    successes: int
    likelihood: float
    uniform: float
    jeffreys: float
    novick_hall: float

    def to_json(self) -> dict[str, float]:
        return {
            "x": self.successes,
            "likelihood": self.likelihood,
            "uniform": self.uniform,
            "jeffreys": self.jeffreys,
            "novick_hall": self.novick_hall,
        }


def _log_normalizer(m: int, x: int) -> float:
    """log of p^x (1-p)^(m-x) at the maximum-likelihood bias, with 0^0 = 1."""
    phat = x / m
    out = 0.0
    if x:
        out += x * math.log(phat)
    if m - x:
        out += (m - x) * math.log1p(-phat)
    return out


def normalized_binomial_likelihood(p: float, scenario: BinomialScenario) -> float:
    """l(p) = p^x (1-p)^(m-x) scaled so the maximum over [0, 1] is 1.

    Endpoints follow the 0^0 = 1 convention; the value is 1 exactly at
    p = x/m and lies in [0, 1] everywhere.
    """
    p = float(p)
    if not (0.0 <= p <= 1.0):
        raise GambleError(f"bias must lie in [0, 1], got {p}")
    m, x = scenario.trials, scenario.successes
    if p == 0.0:
        return 1.0 if x == 0 else 0.0
    if p == 1.0:
        return 1.0 if x == m else 0.0
    ll = -_log_normalizer(m, x)
    if x:
        ll += x * math.log(p)
    if m - x:
        ll += (m - x) * math.log1p(-p)
    return min(1.0, math.exp(ll))


def golden_section_maximize(
    f: Callable[[float], float], lo: float, hi: float, tol: float = REFINE_TOL
) -> tuple[float, float]:
    """Maximize a unimodal function on [lo, hi]; returns (argmax, value).

    Narrows the bracket to width ``tol`` and returns the best point actually
    evaluated, so the value never regresses below any probe.
    """
    if hi < lo:
        lo, hi = hi, lo
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    best_x, best_f = a, f(a)
    fb = f(b)
    if fb > best_f:
        best_x, best_f = b, fb
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(200):
        if b - a <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    for x_pt, f_pt in ((c, fc), (d, fd)):
        if f_pt > best_f:
            best_x, best_f = x_pt, f_pt
    mid = 0.5 * (a + b)
    fm = f(mid)
    if fm > best_f:
        best_x, best_f = mid, fm
    return best_x, best_f


def _component_max(scenario: BinomialScenario, component: Literal["alpha", "beta"]) -> float:
    """max over p of l(p) times the alpha or beta weight of a constant p."""
    m, x, c = scenario.trials, scenario.successes, scenario.premium
    sign = 1.0 if component == "alpha" else -1.0
    lognorm = _log_normalizer(m, x)

    def objective(p: float) -> float:
        if p <= 0.0:
            # l(0) * weight(0): the alpha weight vanishes at 0, beta is 1.
            return (1.0 if x == 0 else 0.0) if component == "beta" else 0.0
        if p >= 1.0:
            return (1.0 if x == m else 0.0) if component == "alpha" else 0.0
        ll = -lognorm
        if x:
            ll += x * math.log(p)
        if m - x:
            ll += (m - x) * math.log1p(-p)
        t = sign * (math.log(p) - math.log1p(-p) - c)
        return min(1.0, math.exp(ll + min(0.0, t)))

    grid = np.linspace(0.0, 1.0, GRID_POINTS)
    interior = grid[1:-1]
    logp = np.log(interior)
    log1mp = np.log1p(-interior)
    ll = -lognorm + x * logp + (m - x) * log1mp
    t = sign * (logp - log1mp - c)
    values = np.minimum(1.0, np.exp(ll + np.minimum(0.0, t)))
    j = int(np.argmax(values))

    spacing = 1.0 / (GRID_POINTS - 1)
    probes = [float(interior[j])]
    phat = x / m
    if 0.0 < phat < 1.0:
        probes.append(phat)
    probes.append(inverse_logit(c))  # the kink of the min(1, .) weight

    best = max(objective(0.0), objective(1.0), float(values[j]))
    for p0 in probes:
        value = objective(p0)
        if value > best:
            best = value
        lo = max(0.0, p0 - spacing)
        hi = min(1.0, p0 + spacing)
        _, refined = golden_section_maximize(objective, lo, hi)
        if refined > best:
            best = refined
    return best


def continuous_utility_vector(scenario: BinomialScenario) -> UtilityVector:
    """Utility vector of the bet over the full bias continuum."""
    alpha = _component_max(scenario, "alpha")
    beta = _component_max(scenario, "beta")
    return UtilityVector(alpha, beta)


def likelihood_price(scenario: BinomialScenario) -> float:
    """Price of the bet-on-next-toss gamble under the scenario's premium."""
    return price_from_vector(continuous_utility_vector(scenario), scenario.premium)


def bayesian_prices(scenario: BinomialScenario) -> tuple[float, float, float]:
    """Posterior-mean prices under the uniform, Jeffreys, and Novick-Hall priors."""
    m, x = scenario.trials, scenario.successes
    return (x + 1) / (m + 2), (x + 0.5) / (m + 1), x / m


def emit_table(m: int, c: float = 0.0) -> list[PricingRow]:
    """All rows x = 0..m comparing the likelihood price with the Bayesian ones."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise GambleError(f"trials must be a positive integer, got {m!r}")
    rows = []
    for x in range(m + 1):
        scenario = BinomialScenario(m, x, c)
        uniform, jeffreys, novick_hall = bayesian_prices(scenario)
        rows.append(
            PricingRow(
                successes=x,
                likelihood=likelihood_price(scenario),
                uniform=uniform,
                jeffreys=jeffreys,
                novick_hall=novick_hall,
            )
        )
    return rows


def format_price(value: float, digits: int = 4) -> str:
    """Fixed-point string rounded half away from zero."""
    quantum = Decimal(1).scaleb(-digits)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def render_table_text(rows: list[PricingRow]) -> str:
    """Aligned plain-text table with 4-decimal entries."""
    header = f"{'x':>4}  {'likelihood':>10}  {'uniform':>8}  {'jeffreys':>8}  {'novick_hall':>11}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.successes:>4}  {format_price(r.likelihood):>10}  "
            f"{format_price(r.uniform):>8}  {format_price(r.jeffreys):>8}  "
            f"{format_price(r.novick_hall):>11}"
        )
    return "\n".join(lines)


def render_table_csv(rows: list[PricingRow]) -> str:
    """CSV with full-precision values."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.successes},{r.likelihood!r},{r.uniform!r},{r.jeffreys!r},{r.novick_hall!r}"
        )
    return "\n".join(lines)
