"""Recursive likelihood gambles.

A gamble is either a constant utility in [0, 1] or a finite, nonempty set of
prospects.  A prospect pairs a normalized likelihood with a reward, and the
reward may itself be a gamble, nested to any finite depth.  Likelihoods inside
a compound gamble are normalized so that the largest one equals 1: dividing a
likelihood function by its maximum loses no information, because proportional
likelihood functions carry identical evidence about the competing models.

Gambles arise from a concrete decision problem: given a finite set of
candidate probability models, an action scored in utility, and observed data,
each model contributes one prospect (its normalized likelihood of the data,
its expected utility of the action).  ``build_gamble`` performs exactly that
construction from :class:`ModelSpec` values and raw evidence probabilities.

Structural reductions live here too.  ``flatten`` rewrites any gamble into an
equivalent one of depth <= 1 by multiplying likelihoods down each path and
merging duplicate constant rewards under the maximum likelihood; the utility
layer (:mod:`likelihood_gambles.pricing`) is invariant under this rewrite.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import IO, Any, Iterable, Mapping, Sequence, Union

__all__ = [
    "MAX_LIKELIHOOD_TOL",
    "PROB_SUM_TOL",
    "GambleError",
    "DegenerateEvidenceError",
    "InvalidModelError",
    "InfiniteLogitError",
    "Prospect",
    "Gamble",
    "ModelSpec",
    "expected_utility",
    "normalize_likelihoods",
    "build_gamble",
    "depth",
    "compound_likelihood",
    "flatten",
    "gamble_to_json",
    "gamble_from_json",
    "dump_gamble",
    "load_gamble",
    "model_from_json",
    "load_model",
]

# Compound gambles must have max prospect likelihood equal to 1 within this.
MAX_LIKELIHOOD_TOL = 1e-12
# Model outcome probabilities must sum to 1 within this.
PROB_SUM_TOL = 1e-9


class GambleError(ValueError):
    """Base error for invalid gambles, models, or evidence."""


class DegenerateEvidenceError(GambleError):
    """The observed data has probability zero under every candidate model."""


class InvalidModelError(GambleError):
    """A model specification violates its contract."""


class InfiniteLogitError(GambleError):
    """logit() was requested at 0 or 1, where it diverges."""


def _require_unit(value: Any, name: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise GambleError(f"{name} must be a real number, got {value!r}")
    x = float(value)
    if not (0.0 <= x <= 1.0):  # also rejects NaN
        raise GambleError(f"{name} must lie in [0, 1], got {x}")
    return x


GambleLike = Union["Gamble", float, int]


@dataclass(frozen=True)
class Prospect:
    """One (likelihood, reward) pair: a model in the context of data and an action."""

    likelihood: float
    reward: "Gamble"

    def __post_init__(self) -> None:
        object.__setattr__(self, "likelihood", _require_unit(self.likelihood, "likelihood"))
        if not isinstance(self.reward, Gamble):
            raise GambleError(f"reward must be a Gamble, got {type(self.reward).__name__}")


@dataclass(frozen=True, eq=False)
class Gamble:
    """A constant utility in [0, 1] or a nonempty tuple of prospects.

    Exactly one of ``constant`` / ``prospects`` is populated.  Compound
    gambles require their maximum prospect likelihood to equal 1 within
    ``MAX_LIKELIHOOD_TOL``.  Instances are immutable and safe to share.

    Equality is structural on the flattened, duplicate-merged,
    likelihood-sorted form, which is a decidable stand-in for preference
    equivalence: two gambles that reduce to the same normal form are
    interchangeable in every context.
    """

    constant: float | None = None
    prospects: tuple[Prospect, ...] = ()

    def __post_init__(self) -> None:
        if (self.constant is None) == (not self.prospects):
            raise GambleError("a gamble is either a constant or a nonempty set of prospects")
        if self.constant is not None:
            object.__setattr__(self, "constant", _require_unit(self.constant, "constant"))
            return
        object.__setattr__(self, "prospects", tuple(self.prospects))
        top = max(p.likelihood for p in self.prospects)
        if abs(top - 1.0) > MAX_LIKELIHOOD_TOL:
            raise GambleError(f"maximum prospect likelihood must be 1, got {top}")

    @classmethod
    def from_value(cls, value: float) -> "Gamble":
        """Constant gamble worth ``value`` utility."""
        return cls(constant=value)

    @classmethod
    def from_prospects(cls, pairs: Iterable[tuple[float, GambleLike]]) -> "Gamble":
        """Compound gamble from (likelihood, reward) pairs; bare numbers become constants."""
        prospects = tuple(Prospect(lik, as_gamble(reward)) for lik, reward in pairs)
        return cls(prospects=prospects)

    @property
    def is_constant(self) -> bool:
        return self.constant is not None

    def _normal_key(self) -> tuple:
        if self.is_constant:
            return ("constant", self.constant)
        flat = flatten(self)
        if flat.is_constant:
            return ("constant", flat.constant)
        pairs = tuple((p.likelihood, p.reward.constant) for p in flat.prospects)
        return ("prospects", pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gamble):
            return NotImplemented
        return self._normal_key() == other._normal_key()

    def __hash__(self) -> int:
        return hash(self._normal_key())

    def __repr__(self) -> str:
        if self.is_constant:
            return f"Gamble({self.constant})"
        inner = ", ".join(f"{p.likelihood}/{p.reward!r}" for p in self.prospects)
        return f"Gamble({{{inner}}})"


def as_gamble(value: GambleLike) -> Gamble:
    """Coerce a bare number to a constant gamble; pass gambles through."""
    if isinstance(value, Gamble):
        return value
    return Gamble.from_value(value)


@dataclass(frozen=True)
class ModelSpec:
    """A probability model over outcome labels plus an action's payoff table.

    ``probabilities`` must be nonnegative and sum to 1 within
    ``PROB_SUM_TOL``; ``payoff`` values are utilities in [0, 1].  A payoff is
    required for every outcome that has positive probability.
    """

    probabilities: Mapping[str, float]
    payoff: Mapping[str, float]

    def __post_init__(self) -> None:
        probs = {str(k): float(v) for k, v in dict(self.probabilities).items()}
        pays = {str(k): _require_unit(v, f"payoff[{k!r}]") for k, v in dict(self.payoff).items()}
        if not probs:
            raise InvalidModelError("a model needs at least one outcome")
        for k, v in probs.items():
            if not (v >= 0.0) or math.isinf(v):
                raise InvalidModelError(f"probability of {k!r} must be finite and >= 0, got {v}")
        total = math.fsum(probs.values())
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise InvalidModelError(f"outcome probabilities sum to {total}, expected 1")
        object.__setattr__(self, "probabilities", probs)
        object.__setattr__(self, "payoff", pays)


def expected_utility(model: ModelSpec) -> float:
    """Probability-weighted payoff of the action under one model.

    Raises :class:`InvalidModelError` if an outcome with positive probability
    has no payoff entry.
    """
    total = 0.0
    for outcome, prob in model.probabilities.items():
        if prob == 0.0:
            continue
        if outcome not in model.payoff:
            raise InvalidModelError(f"no payoff for outcome {outcome!r} with probability {prob}")
        total += prob * model.payoff[outcome]
    return min(1.0, max(0.0, total))


def normalize_likelihoods(raw: Sequence[float]) -> list[float]:
    """Divide raw likelihoods by their maximum so the largest becomes exactly 1.

    Raises :class:`DegenerateEvidenceError` when every entry is zero (the data
    is impossible under every model) and :class:`GambleError` on negative or
    non-finite entries.
    """
    values = list(raw)
    if not values:
        raise GambleError("need at least one likelihood")
    for v in values:
        if not (float(v) >= 0.0) or math.isinf(float(v)):
            raise GambleError(f"likelihoods must be finite and >= 0, got {v}")
    top = max(float(v) for v in values)
    if top == 0.0:
        raise DegenerateEvidenceError("evidence has probability 0 under every model")
    return [float(v) / top for v in values]


def build_gamble(models: Sequence[ModelSpec], evidence_probabilities: Sequence[float]) -> Gamble:
    """Encode an action over several models, given data, as a likelihood gamble.

    Each model contributes the prospect (its likelihood of the evidence
    normalized across models, a constant reward equal to its expected
    utility).  Scaling all evidence probabilities by a positive factor leaves
    the result unchanged.
    """
    if len(models) != len(evidence_probabilities) or not models:
        raise GambleError("models and evidence probabilities must have equal nonzero length")
    likelihoods = normalize_likelihoods(evidence_probabilities)
    return Gamble.from_prospects(
        (lik, expected_utility(model)) for lik, model in zip(likelihoods, models)
    )


def depth(g: Gamble) -> int:
    """Nesting depth: 0 for constants, 1 + deepest reward otherwise."""
    if g.is_constant:
        return 0
    return 1 + max(depth(p.reward) for p in g.prospects)


def compound_likelihood(l1: float, l2: float) -> float:
    """Likelihood of jointly holding two independent models: the product."""
    return _require_unit(l1, "l1") * _require_unit(l2, "l2")


def flatten(g: Gamble) -> Gamble:
    """Equivalent gamble of depth <= 1.

    A prospect whose reward is itself compound is replaced by that reward's
    prospects with likelihoods multiplied through, repeatedly, until every
    reward is a constant.  Prospects sharing a constant reward then collapse
    to one prospect carrying the maximum likelihood (a smaller likelihood on
    the same reward can never win the pointwise maximum that defines
    utility).  Constants pass through unchanged; the reduction preserves
    utility for every ambiguity premium.
    """
    if g.is_constant:
        return g
    best: dict[float, float] = {}
    stack: list[tuple[float, Gamble]] = [(p.likelihood, p.reward) for p in reversed(g.prospects)]
    while stack:
        lik, reward = stack.pop()
        if reward.is_constant:
            value = reward.constant
            if lik > best.get(value, -1.0):
                best[value] = lik
        else:
            stack.extend((lik * p.likelihood, p.reward) for p in reversed(reward.prospects))
    top = max(best.values())
    if top != 1.0:
        # Tolerated drift from within-tolerance inputs; restore exactness.
        best = {value: lik / top for value, lik in best.items()}
    ordered = sorted(best.items(), key=lambda item: (-item[1], item[0]))
    return Gamble.from_prospects((lik, value) for value, lik in ordered)


# ---------------------------------------------------------------------------
# JSON wire formats
#
# Gamble:  {"constant": 0.5}
#          {"prospects": [{"likelihood": 1.0, "reward": {"constant": 0.5}}, ...]}
# Model:   {"probabilities": {"head": 0.5, "tail": 0.5}, "payoff": {"head": 1.0, "tail": 0.0}}
# ---------------------------------------------------------------------------


def gamble_to_json(g: Gamble) -> dict[str, Any]:
    """Plain-dict form of a gamble, mirroring the JSON file format."""
    if g.is_constant:
        return {"constant": g.constant}
    return {
        "prospects": [
            {"likelihood": p.likelihood, "reward": gamble_to_json(p.reward)}
            for p in g.prospects
        ]
    }


def gamble_from_json(obj: Any, strict: bool = False) -> Gamble:
    """Parse the dict form of a gamble.

    Un-normalized likelihoods are accepted and divided by their maximum at
    each level; with ``strict=True`` a maximum differing from 1 is rejected
    instead.
    """
    if not isinstance(obj, Mapping):
        raise GambleError(f"expected a JSON object, got {type(obj).__name__}")
    if "constant" in obj:
        return Gamble.from_value(obj["constant"])
    if "prospects" not in obj:
        raise GambleError("gamble object needs a 'constant' or 'prospects' key")
    entries = obj["prospects"]
    if not isinstance(entries, Sequence) or isinstance(entries, (str, bytes)) or not entries:
        raise GambleError("'prospects' must be a nonempty array")
    raw: list[float] = []
    rewards: list[Gamble] = []
    for entry in entries:
        if not isinstance(entry, Mapping) or "likelihood" not in entry or "reward" not in entry:
            raise GambleError("each prospect needs 'likelihood' and 'reward' keys")
        lik = float(entry["likelihood"])
        if not (lik >= 0.0) or math.isinf(lik):
            raise GambleError(f"likelihood must be finite and >= 0, got {lik}")
        raw.append(lik)
        rewards.append(gamble_from_json(entry["reward"], strict=strict))
    top = max(raw)
    if strict and abs(top - 1.0) > MAX_LIKELIHOOD_TOL:
        raise GambleError(f"strict mode: maximum likelihood is {top}, expected 1")
    likelihoods = normalize_likelihoods(raw)
    return Gamble(prospects=tuple(Prospect(l, r) for l, r in zip(likelihoods, rewards)))


def dump_gamble(g: Gamble, fp: IO[str] | None = None) -> str:
    """Serialize a gamble to JSON text; also write it to ``fp`` if given."""
    text = json.dumps(gamble_to_json(g))
    if fp is not None:
        fp.write(text)
    return text


def load_gamble(source: str | IO[str], strict: bool = False) -> Gamble:
    """Read a gamble from a file path or open text stream."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    else:
        obj = json.load(source)
    return gamble_from_json(obj, strict=strict)


def model_from_json(obj: Any) -> ModelSpec:
    """Parse the dict form of a model specification."""
    if not isinstance(obj, Mapping) or "probabilities" not in obj or "payoff" not in obj:
        raise InvalidModelError("model object needs 'probabilities' and 'payoff' keys")
    return ModelSpec(probabilities=obj["probabilities"], payoff=obj["payoff"])


def load_model(source: str | IO[str]) -> ModelSpec:
    """Read a model specification from a file path or open text stream."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    else:
        obj = json.load(source)
    return model_from_json(obj)
