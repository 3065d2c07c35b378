"""Two-dimensional utility and pricing of likelihood gambles.

Every gamble maps to a point <alpha, beta> on the top and right borders of
the unit square (the set B: max(alpha, beta) = 1).  The point is the unique
canonical gamble {alpha/1, beta/0} the holder finds interchangeable with the
original, so preference between gambles reduces to the componentwise order
on B: <a1, b1> beats <a2, b2> iff a1 >= a2 and b1 <= b2.  On B that order is
total.

The map itself is driven by a single taste parameter, the ambiguity premium
c: the log-odds of the price the decision maker quotes for the fair gamble
{1/1, 1/0}.  c = 0 is ambiguity neutral, c > 0 seeking, c < 0 averse.  For a
constant utility x in (0, 1),

    alpha = min(1, exp(logit(x) - c)),   beta = min(1, exp(c - logit(x))),

with the limiting vectors <0, 1> at x = 0 and <1, 0> at x = 1.  A compound
gamble's vector is the pointwise maximum of its likelihood-scaled reward
vectors, and the price of any gamble comes back through the logistic:

    price = inverse_logit(ln(alpha / beta) + c)

with the conventions price = 1 when beta = 0 and price = 0 when alpha = 0.
Pricing a constant returns that constant, for every premium.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .gambles import Gamble, GambleError, InfiniteLogitError

__all__ = [
    "VECTOR_TOL",
    "UtilityVector",
    "Ordering",
    "logit",
    "inverse_logit",
    "canonical_of_value",
    "compare",
    "utility_of_gamble",
    "price",
    "price_from_vector",
    "prefer",
    "implied_prior",
    "canonical_equivalent",
]

# Vector equality and membership in B are decided at this tolerance.
VECTOR_TOL = 1e-12

Ordering = Literal["greater", "equal", "less"]


@dataclass(frozen=True)
class UtilityVector:
    """A point <alpha, beta> on B, the top/right border of the unit square."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        a, b = float(self.alpha), float(self.beta)
        if not (0.0 <= a <= 1.0 and 0.0 <= b <= 1.0):
            raise GambleError(f"utility vector components must lie in [0, 1], got <{a}, {b}>")
        if abs(max(a, b) - 1.0) > VECTOR_TOL:
            raise GambleError(f"utility vector must satisfy max(alpha, beta) = 1, got <{a}, {b}>")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def to_json(self) -> dict[str, float]:
        return {"alpha": self.alpha, "beta": self.beta}


def _require_premium(c: float) -> float:
    c = float(c)
    if not math.isfinite(c):
        raise GambleError(f"ambiguity premium must be finite, got {c}")
    return c


def logit(z: float) -> float:
    """ln(z / (1 - z)) for z strictly inside (0, 1)."""
    z = float(z)
    if not (0.0 <= z <= 1.0):
        raise GambleError(f"logit argument must lie in [0, 1], got {z}")
    if z == 0.0 or z == 1.0:
        raise InfiniteLogitError(f"logit diverges at {z}")
    return math.log(z / (1.0 - z))


def inverse_logit(t: float) -> float:
    """The logistic function 1 / (1 + exp(-t)), computed without overflow."""
    t = float(t)
    if t >= 0.0:
        return 1.0 / (1.0 + math.exp(-t))
    z = math.exp(t)
    return z / (1.0 + z)


def _canonical_pair(x: float, c: float) -> tuple[float, float]:
    """Raw (alpha, beta) for a constant x; exp is only ever taken of t <= 0."""
    if x == 0.0:
        return 0.0, 1.0
    if x == 1.0:
        return 1.0, 0.0
    t = logit(x) - c
    alpha = 1.0 if t >= 0.0 else math.exp(t)
    beta = 1.0 if t <= 0.0 else math.exp(-t)
    return alpha, beta


def canonical_of_value(x: float, c: float = 0.0) -> UtilityVector:
    """Vector in B equivalent to holding the constant utility ``x`` outright.

    The endpoints use the continuous limits <0, 1> and <1, 0>.  The value is
    recoverable: pricing {alpha/1, beta/0} at the same premium returns ``x``.
    """
    if not isinstance(x, (int, float)) or isinstance(x, bool):
        raise GambleError(f"value must be a real number, got {x!r}")
    x = float(x)
    if not (0.0 <= x <= 1.0):
        raise GambleError(f"value must lie in [0, 1], got {x}")
    alpha, beta = _canonical_pair(x, _require_premium(c))
    return UtilityVector(alpha, beta)


def compare(u: UtilityVector, v: UtilityVector) -> Ordering:
    """Total order on B: higher alpha and lower beta is better.

    Components within ``VECTOR_TOL`` of each other count as tied; two vectors
    tied in both components are ``equal``.
    """
    if abs(u.alpha - v.alpha) <= VECTOR_TOL and abs(u.beta - v.beta) <= VECTOR_TOL:
        return "equal"
    if u.alpha >= v.alpha and u.beta <= v.beta:
        return "greater"
    if v.alpha >= u.alpha and v.beta <= u.beta:
        return "less"
    # Unreachable for genuine members of B: one of any two points dominates.
    raise GambleError(f"vectors <{u.alpha}, {u.beta}> and <{v.alpha}, {v.beta}> are incomparable")


def _utility_pair(g: Gamble, c: float) -> tuple[float, float]:
    """Recursive (alpha, beta); intermediate scaled pairs may leave B."""
    if g.is_constant:
        return _canonical_pair(g.constant, c)
    alpha = 0.0
    beta = 0.0
    for p in g.prospects:
        a, b = _utility_pair(p.reward, c)
        alpha = max(alpha, p.likelihood * a)
        beta = max(beta, p.likelihood * b)
    return alpha, beta


def utility_of_gamble(g: Gamble, c: float = 0.0) -> UtilityVector:
    """The gamble's point in B under ambiguity premium ``c``.

    Constants map through :func:`canonical_of_value`; a compound gamble maps
    to the pointwise maximum of its likelihood-scaled reward vectors.
    """
    alpha, beta = _utility_pair(g, _require_premium(c))
    return UtilityVector(alpha, beta)


def price_from_vector(u: UtilityVector, c: float = 0.0) -> float:
    """Invert a utility vector to the constant the holder would trade it for."""
    c = _require_premium(c)
    if u.beta == 0.0:
        return 1.0
    if u.alpha == 0.0:
        return 0.0
    return inverse_logit(math.log(u.alpha / u.beta) + c)


def price(g: Gamble, c: float = 0.0) -> float:
    """Fair price in [0, 1] of a gamble under ambiguity premium ``c``."""
    return price_from_vector(utility_of_gamble(g, c), c)


def prefer(g1: Gamble, g2: Gamble, c: float = 0.0) -> Ordering:
    """Order two gambles by comparing their utility vectors."""
    c = _require_premium(c)
    return compare(utility_of_gamble(g1, c), utility_of_gamble(g2, c))


def implied_prior(observed_fair_price: float) -> tuple[float, str]:
    """Back out the prior a Bayesian would need to quote this fair-gamble price.

    For the fair gamble (evidence supporting both payoffs equally) the
    implicit prior equals the quoted price itself, and its log-odds is the
    ambiguity premium.  Returns ``(rho, classification)`` with classification
    one of ``"seeking"``, ``"neutral"``, ``"averse"``.
    """
    p = float(observed_fair_price)
    if p == 0.0 or p == 1.0:
        raise InfiniteLogitError(f"price {p} implies an infinite ambiguity premium")
    c = logit(p)
    if abs(c) <= VECTOR_TOL:
        classification = "neutral"
    elif c > 0.0:
        classification = "seeking"
    else:
        classification = "averse"
    return p, classification


def canonical_equivalent(g: Gamble, c: float = 0.0) -> Gamble:
    """The canonical gamble {alpha/1, beta/0} interchangeable with ``g``.

    Its price equals the price of ``g`` at the same premium.
    """
    u = utility_of_gamble(g, c)
    return Gamble.from_prospects([(u.alpha, 1.0), (u.beta, 0.0)])
