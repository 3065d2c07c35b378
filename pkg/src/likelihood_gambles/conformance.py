"""Random gambles and an executable conformance suite for the preference laws.

The utility representation promises a bundle of algebraic laws: the order it
induces is complete and transitive, mixing respects preference, collapsing a
nested gamble or merging duplicated prospects never changes value, every
gamble sits between the constants 0 and 1, and pricing inverts the utility
of constants.  Each law is replayed here on deterministically generated
random instances; a law that cannot fail in exact arithmetic can still
betray an implementation bug or floating-point hazard, which is the point.

The harness is deterministic: instance seeds derive from the configured
seed, the property name, and the instance index, so identical configurations
yield identical reports regardless of property order.  Counterexamples are
shrunk greedily (drop a prospect, promote a nested reward) until no smaller
failing instance exists, then serialized.

``run_conformance`` accepts an alternative utility evaluator, which exists
for mutation testing: hand it a deliberately wrong recursion and the
corresponding law reports failures instead of raising.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .gambles import (
    Gamble,
    GambleError,
    ModelSpec,
    Prospect,
    build_gamble,
    depth,
    flatten,
    gamble_to_json,
)
from .pricing import (
    Ordering,
    UtilityVector,
    _utility_pair,
    compare,
    price_from_vector,
)

__all__ = [
    "GenConfig",
    "PropertyResult",
    "ConformanceReport",
    "generate_gamble",
    "run_conformance",
    "property_names",
]

PAIR_TOL = 1e-12
ROUNDTRIP_TOL = 1e-9

# Constants are drawn from this lattice so duplicate-merge paths get exercised.
_LATTICE = [i / 10 for i in range(11)]

PairFn = Callable[[Gamble, float], tuple[float, float]]


@dataclass(frozen=True)
class GenConfig:
    """Shape and determinism knobs for the random-gamble generator."""

    max_depth: int = 4
    max_branching: int = 4
    seed: int = 0
    samples: int = 1000

    def __post_init__(self) -> None:
        if not (0 <= self.max_depth <= 6):
            raise GambleError(f"max_depth must be in [0, 6], got {self.max_depth}")
        if self.max_branching < 1:
            raise GambleError(f"max_branching must be >= 1, got {self.max_branching}")
        if self.samples < 0:
            raise GambleError(f"samples must be >= 0, got {self.samples}")
        if not (0 <= self.seed < 2**64):
            raise GambleError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def _random_likelihood(rng: random.Random) -> float:
    # Lattice draws make exact ties and zero likelihoods reachable.
    if rng.random() < 0.25:
        return rng.choice(_LATTICE)
    return rng.random()


def _random_gamble(rng: random.Random, depth_budget: int, max_branching: int) -> Gamble:
    if depth_budget == 0 or rng.random() < 0.3:
        return Gamble.from_value(rng.choice(_LATTICE))
    k = rng.randint(1, max_branching)
    likelihoods = [_random_likelihood(rng) for _ in range(k)]
    top = max(likelihoods)
    if top == 0.0:
        likelihoods[rng.randrange(k)] = 1.0
        top = 1.0
    likelihoods = [lik / top for lik in likelihoods]
    rewards = [_random_gamble(rng, depth_budget - 1, max_branching) for _ in range(k)]
    return Gamble(prospects=tuple(Prospect(l, r) for l, r in zip(likelihoods, rewards)))


def generate_gamble(config: GenConfig) -> Gamble:
    """A random gamble within the configured depth and branching bounds.

    Deterministic: the same config always yields the same gamble.
    """
    rng = random.Random(config.seed)
    return _random_gamble(rng, config.max_depth, config.max_branching)


def _instance_seed(seed: int, name: str, index: int) -> int:
    digest = hashlib.blake2b(
        f"{name}:{index}".encode(), digest_size=8, key=seed.to_bytes(8, "big")
    ).digest()
    return int.from_bytes(digest, "big")


# ---------------------------------------------------------------------------
# Property checks
#
# A property draws its inputs from a seeded RNG, then evaluates a pure
# predicate.  `inputs` holds the gambles eligible for shrinking; `aux`
# carries everything else the predicate needs, fixed at draw time.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Ctx:
    premium: float
    config: GenConfig
    pair: PairFn

    def gamble(self, rng: random.Random) -> Gamble:
        return _random_gamble(rng, self.config.max_depth, self.config.max_branching)

    def vector(self, g: Gamble) -> UtilityVector:
        a, b = self.pair(g, self.premium)
        return UtilityVector(a, b)

    def price(self, g: Gamble) -> float:
        return price_from_vector(self.vector(g), self.premium)

    def prefer(self, g1: Gamble, g2: Gamble) -> Ordering:
        return compare(self.vector(g1), self.vector(g2))


@dataclass(frozen=True)
class _Property:
    name: str
    draw: Callable[[random.Random, "_Ctx"], tuple[tuple, dict]]
    holds: Callable[[tuple, dict, "_Ctx"], bool]
    payload: Callable[[tuple, dict], Any] | None = None


def _close(p: tuple[float, float], q: tuple[float, float], tol: float = PAIR_TOL) -> bool:
    return abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol


def _draw_one(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    return (ctx.gamble(rng),), {}


def _draw_two(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    return (ctx.gamble(rng), ctx.gamble(rng)), {}


def _draw_three(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    return (ctx.gamble(rng), ctx.gamble(rng), ctx.gamble(rng)), {}


def _check_normalization(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    stack = [inputs[0]]
    while stack:
        g = stack.pop()
        if g.is_constant:
            continue
        if abs(max(p.likelihood for p in g.prospects) - 1.0) > PAIR_TOL:
            return False
        stack.extend(p.reward for p in g.prospects)
    return True


def _check_flatten_soundness(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    flat = flatten(inputs[0])
    return depth(flat) <= 1 and flatten(flat) == flat


def _check_flatten_utility(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    (g,) = inputs
    return _close(ctx.pair(g, ctx.premium), ctx.pair(flatten(g), ctx.premium))


def _draw_idempotence(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    reward = ctx.gamble(rng)
    count = rng.randint(1, ctx.config.max_branching)
    likelihoods = [_random_likelihood(rng) for _ in range(count)]
    likelihoods[rng.randrange(count)] = 1.0
    return (reward,), {"likelihoods": likelihoods}


def _check_idempotence(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    (reward,) = inputs
    duplicated = Gamble.from_prospects((lik, reward) for lik in aux["likelihoods"])
    return ctx.pair(duplicated, ctx.premium) == ctx.pair(reward, ctx.premium)


def _draw_partition(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    g = ctx.gamble(rng)
    for _ in range(8):
        if not g.is_constant and len(g.prospects) >= 2:
            break
        g = ctx.gamble(rng)
    return (g,), {"selector": rng.getrandbits(60)}


def _check_partition(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    (g,) = inputs
    if g.is_constant or len(g.prospects) < 2:
        return True
    n = len(g.prospects)
    chosen = [i for i in range(n) if (aux["selector"] >> (i % 60)) & 1]
    if not chosen:
        chosen = [0]
    if len(chosen) == n:
        chosen.pop()
    group = [g.prospects[i] for i in chosen]
    rest = [g.prospects[i] for i in range(n) if i not in set(chosen)]
    group_top = max(p.likelihood for p in group)
    if group_top == 0.0:
        return True
    inner = Gamble(
        prospects=tuple(Prospect(p.likelihood / group_top, p.reward) for p in group)
    )
    regrouped = Gamble(prospects=(Prospect(group_top, inner), *rest))
    return _close(ctx.pair(g, ctx.premium), ctx.pair(regrouped, ctx.premium))


def _check_bounds(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    (g,) = inputs
    top = ctx.vector(Gamble.from_value(1.0))
    bottom = ctx.vector(Gamble.from_value(0.0))
    u = ctx.vector(g)
    if compare(top, u) == "less" or compare(u, bottom) == "less":
        return False
    return 0.0 <= ctx.price(g) <= 1.0


def _draw_independence(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    inputs = (ctx.gamble(rng), ctx.gamble(rng), ctx.gamble(rng))
    mix = [_random_likelihood(rng), _random_likelihood(rng)]
    mix[rng.randrange(2)] = 1.0
    return inputs, {"mix": tuple(mix)}


def _check_independence(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    f, g, h = inputs
    if ctx.prefer(f, g) == "less":
        f, g = g, f
    a1, a2 = aux["mix"]
    mixed_f = Gamble.from_prospects([(a1, f), (a2, h)])
    mixed_g = Gamble.from_prospects([(a1, g), (a2, h)])
    return ctx.prefer(mixed_f, mixed_g) != "less"


_RANK = {"greater": 1, "equal": 0, "less": -1}


def _check_transitivity(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    f, g, h = inputs
    ofg, ogh, ofh = ctx.prefer(f, g), ctx.prefer(g, h), ctx.prefer(f, h)
    if _RANK[ofg] != -_RANK[ctx.prefer(g, f)]:
        return False
    if _RANK[ofg] >= 0 and _RANK[ogh] >= 0 and _RANK[ofh] < 0:
        return False
    if _RANK[ofg] <= 0 and _RANK[ogh] <= 0 and _RANK[ofh] > 0:
        return False
    return True


def _draw_constants(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    if rng.random() < 0.5:
        x, y = rng.choice(_LATTICE), rng.choice(_LATTICE)
    else:
        x, y = rng.random(), rng.random()
    if x < y:
        x, y = y, x
    if x != y and x - y < 1e-6:
        # A sub-1e-6 gap can fall below the comparison tolerance; widen it.
        y = max(0.0, x - 0.01)
    return (), {"x": x, "y": y}


def _check_numerical_order(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    x, y = aux["x"], aux["y"]
    outcome = ctx.prefer(Gamble.from_value(x), Gamble.from_value(y))
    if x == y:
        return outcome == "equal"
    return outcome == "greater"


def _payload_constants(inputs: tuple, aux: dict) -> Any:
    return [
        gamble_to_json(Gamble.from_value(aux["x"])),
        gamble_to_json(Gamble.from_value(aux["y"])),
    ]


def _check_archimedean(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    f, g, h = inputs
    if ctx.prefer(f, g) == "less":
        f, g = g, f
    if ctx.prefer(g, h) == "less":
        g, h = h, g
        if ctx.prefer(f, g) == "less":
            f, g = g, f
    if ctx.prefer(f, g) != "greater" or ctx.prefer(g, h) != "greater":
        return True
    uf, ug, uh = ctx.vector(f), ctx.vector(g), ctx.vector(h)
    # Witness above g: keep f at weight 1 and shade h until the mixture wins.
    if uh.beta > 0.0 and ug.beta > uf.beta:
        a2 = min(1.0, 0.5 * (uf.beta + ug.beta) / uh.beta)
    else:
        a2 = 1.0
    for _ in range(80):
        mixture = Gamble.from_prospects([(1.0, f), (a2, h)])
        if ctx.prefer(mixture, g) == "greater":
            break
        a2 /= 2.0
    else:
        return False
    # Witness below g: keep h at weight 1 and shade f.
    if uf.alpha > 0.0 and ug.alpha > uh.alpha:
        b1 = min(1.0, 0.5 * (ug.alpha + uh.alpha) / uf.alpha)
    else:
        b1 = 1.0
    for _ in range(80):
        mixture = Gamble.from_prospects([(b1, f), (1.0, h)])
        if ctx.prefer(mixture, g) == "less":
            return True
        b1 /= 2.0
    return False


def _draw_roundtrip(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    return (), {"x": rng.random()}


def _check_roundtrip(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    x = aux["x"]
    return abs(ctx.price(Gamble.from_value(x)) - x) <= ROUNDTRIP_TOL


def _payload_roundtrip(inputs: tuple, aux: dict) -> Any:
    return gamble_to_json(Gamble.from_value(aux["x"]))


def _check_canonical_price(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    (g,) = inputs
    u = ctx.vector(g)
    canonical = Gamble.from_prospects([(u.alpha, 1.0), (u.beta, 0.0)])
    return abs(ctx.price(canonical) - ctx.price(g)) <= PAIR_TOL


def _draw_monotonicity(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    return (), {"pair": tuple(sorted((rng.random(), rng.random())))}


def _check_price_monotonicity(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    low, high = aux["pair"]

    def canonical_price(alpha: float, beta: float) -> float:
        return ctx.price(Gamble.from_prospects([(alpha, 1.0), (beta, 0.0)]))

    # Lower beta cannot hurt, higher alpha cannot hurt, and the top border
    # always weakly beats the right border.
    if canonical_price(1.0, low) < canonical_price(1.0, high):
        return False
    if canonical_price(high, 1.0) < canonical_price(low, 1.0):
        return False
    return canonical_price(1.0, low) >= canonical_price(low, 1.0)


def _payload_monotonicity(inputs: tuple, aux: dict) -> Any:
    low, high = aux["pair"]
    return [
        gamble_to_json(Gamble.from_prospects([(1.0, 1.0), (low, 0.0)])),
        gamble_to_json(Gamble.from_prospects([(1.0, 1.0), (high, 0.0)])),
    ]


def _draw_zero_prospect(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    g = ctx.gamble(rng)
    if g.is_constant:
        g = Gamble.from_prospects([(1.0, g)])
    return (g, ctx.gamble(rng)), {}


def _check_zero_prospect(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    g, extra = inputs
    if g.is_constant:
        g = Gamble.from_prospects([(1.0, g)])
    padded = Gamble(prospects=(*g.prospects, Prospect(0.0, extra)))
    return ctx.pair(padded, ctx.premium) == ctx.pair(g, ctx.premium)


def _random_models(rng: random.Random) -> tuple[list[ModelSpec], list[float]]:
    count = rng.randint(1, 4)
    outcomes = [f"o{i}" for i in range(rng.randint(2, 4))]
    models = []
    for _ in range(count):
        weights = [rng.random() + 1e-9 for _ in outcomes]
        total = math.fsum(weights)
        models.append(
            ModelSpec(
                probabilities={o: w / total for o, w in zip(outcomes, weights)},
                payoff={o: rng.choice(_LATTICE) for o in outcomes},
            )
        )
    evidence = [rng.random() for _ in range(count)]
    evidence[rng.randrange(count)] = max(max(evidence), 0.5)
    return models, evidence


def _draw_evidence_scaling(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    models, evidence = _random_models(rng)
    return (), {
        "models": models,
        "evidence": evidence,
        "pow2": 2.0 ** rng.randint(-16, 16),
        "factor": rng.uniform(0.01, 100.0),
    }


def _check_evidence_scaling(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    models, evidence = aux["models"], aux["evidence"]
    base = build_gamble(models, evidence)
    # Power-of-two scaling is exactly representable, so equality is structural.
    exact = build_gamble(models, [aux["pow2"] * e for e in evidence])
    if exact != base:
        return False
    # An arbitrary factor can wiggle each likelihood by one ulp; the priced
    # value and the induced preference must still agree at tolerance.
    scaled = build_gamble(models, [aux["factor"] * e for e in evidence])
    if abs(ctx.price(scaled) - ctx.price(base)) > PAIR_TOL:
        return False
    return ctx.prefer(scaled, base) == "equal"


def _payload_evidence(inputs: tuple, aux: dict) -> Any:
    return gamble_to_json(build_gamble(aux["models"], aux["evidence"]))


def _draw_model_permutation(rng: random.Random, ctx: _Ctx) -> tuple[tuple, dict]:
    models, evidence = _random_models(rng)
    order = list(range(len(models)))
    rng.shuffle(order)
    return (), {"models": models, "evidence": evidence, "order": order}


def _check_model_permutation(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    models, evidence, order = aux["models"], aux["evidence"], aux["order"]
    base = build_gamble(models, evidence)
    permuted = build_gamble([models[i] for i in order], [evidence[i] for i in order])
    return permuted == base


def _check_totality(inputs: tuple, aux: dict, ctx: _Ctx) -> bool:
    g1, g2 = inputs
    u, v = ctx.vector(g1), ctx.vector(g2)
    forward = compare(u, v)
    if forward not in ("greater", "equal", "less"):
        return False
    if _RANK[forward] != -_RANK[compare(v, u)]:
        return False
    return compare(u, u) == "equal"


_PROPERTIES: tuple[_Property, ...] = (
    _Property("normalization", _draw_one, _check_normalization),
    _Property("flatten_soundness", _draw_one, _check_flatten_soundness),
    _Property("flatten_preserves_utility", _draw_one, _check_flatten_utility),
    _Property("idempotence", _draw_idempotence, _check_idempotence),
    _Property("partition_substitution", _draw_partition, _check_partition),
    _Property("bounds", _draw_one, _check_bounds),
    _Property("weak_independence", _draw_independence, _check_independence),
    _Property("transitivity", _draw_three, _check_transitivity),
    _Property("numerical_order", _draw_constants, _check_numerical_order, _payload_constants),
    _Property("archimedean_witness", _draw_three, _check_archimedean),
    _Property("price_roundtrip", _draw_roundtrip, _check_roundtrip, _payload_roundtrip),
    _Property("canonical_price_equality", _draw_one, _check_canonical_price),
    _Property(
        "price_monotonicity", _draw_monotonicity, _check_price_monotonicity, _payload_monotonicity
    ),
    _Property("zero_prospect_inert", _draw_zero_prospect, _check_zero_prospect),
    _Property("evidence_scaling", _draw_evidence_scaling, _check_evidence_scaling, _payload_evidence),
    _Property(
        "model_permutation", _draw_model_permutation, _check_model_permutation, _payload_evidence
    ),
    _Property("compare_totality", _draw_two, _check_totality),
)


def property_names() -> list[str]:
    """Names of every law the suite can check, in execution order."""
    return [prop.name for prop in _PROPERTIES]


# ---------------------------------------------------------------------------
# Shrinking and reporting
# ---------------------------------------------------------------------------


def _shrink_candidates(g: Gamble) -> Iterable[Gamble]:
    if g.is_constant:
        return
    prospects = g.prospects
    for p in prospects:
        yield p.reward
    if len(prospects) > 1:
        for i in range(len(prospects)):
            rest = prospects[:i] + prospects[i + 1 :]
            top = max(p.likelihood for p in rest)
            if top == 0.0:
                continue
            yield Gamble(prospects=tuple(Prospect(p.likelihood / top, p.reward) for p in rest))
    for i, p in enumerate(prospects):
        for candidate in _shrink_candidates(p.reward):
            yield Gamble(
                prospects=prospects[:i] + (Prospect(p.likelihood, candidate),) + prospects[i + 1 :]
            )


def _shrink(inputs: tuple, aux: dict, prop: _Property, ctx: _Ctx) -> tuple:
    current = list(inputs)
    shrunk = True
    while shrunk:
        shrunk = False
        for i, item in enumerate(current):
            if not isinstance(item, Gamble):
                continue
            for candidate in _shrink_candidates(item):
                trial = list(current)
                trial[i] = candidate
                try:
                    still_failing = not prop.holds(tuple(trial), aux, ctx)
                except GambleError:
                    still_failing = True
                if still_failing:
                    current = trial
                    shrunk = True
                    break
            if shrunk:
                break
    return tuple(current)


def _serialize(inputs: tuple, aux: dict, prop: _Property) -> Any:
    if prop.payload is not None:
        return prop.payload(inputs, aux)
    gambles = [gamble_to_json(item) for item in inputs if isinstance(item, Gamble)]
    if not gambles:
        return None
    if len(gambles) == 1:
        return gambles[0]
    return gambles


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one law over all sampled instances."""

    name: str
    samples: int
    failures: int
    seed: int | None = None
    counterexample: Any | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "property": self.name,
            "samples": self.samples,
            "failures": self.failures,
            "seed": self.seed,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class ConformanceReport:
    premium: float
    config: GenConfig
    results: tuple[PropertyResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> list[dict[str, Any]]:
        return [r.to_json() for r in self.results]

    def summary(self) -> str:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name}: {r.failures}/{r.samples} failures")
        return "\n".join(lines)


def _run_property(prop: _Property, config: GenConfig, ctx: _Ctx) -> PropertyResult:
    failures = 0
    first_seed: int | None = None
    first_ce: Any | None = None
    for index in range(config.samples):
        seed = _instance_seed(config.seed, prop.name, index)
        rng = random.Random(seed)
        inputs: tuple = ()
        aux: dict = {}
        try:
            inputs, aux = prop.draw(rng, ctx)
            ok = prop.holds(inputs, aux, ctx)
        except GambleError:
            ok = False
        if not ok:
            failures += 1
            if first_seed is None:
                first_seed = seed
                shrunk = _shrink(inputs, aux, prop, ctx) if inputs else inputs
                try:
                    first_ce = _serialize(shrunk, aux, prop)
                except GambleError:
                    first_ce = None
    return PropertyResult(prop.name, config.samples, failures, first_seed, first_ce)


def run_conformance(
    config: GenConfig,
    c: float = 0.0,
    properties: Sequence[str] | None = None,
    utility_fn: PairFn | None = None,
) -> ConformanceReport:
    """Replay the preference laws on random instances and report per-law results.

    ``properties`` restricts the run to a subset of :func:`property_names`;
    ``utility_fn`` substitutes the raw (alpha, beta) evaluator, which lets a
    test prove the suite catches a broken implementation.  Failures are
    report content, not exceptions.
    """
    if not math.isfinite(float(c)):
        raise GambleError(f"ambiguity premium must be finite, got {c}")
    selected = list(_PROPERTIES)
    if properties is not None:
        known = {prop.name: prop for prop in _PROPERTIES}
        unknown = [name for name in properties if name not in known]
        if unknown:
            raise GambleError(f"unknown properties: {unknown}")
        selected = [known[name] for name in properties]
    ctx = _Ctx(premium=float(c), config=config, pair=utility_fn or _utility_pair)
    results = tuple(_run_property(prop, config, ctx) for prop in selected)
    return ConformanceReport(premium=float(c), config=config, results=results)
