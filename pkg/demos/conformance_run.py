"""Replaying the preference laws on random gambles, and catching a mutant.

The conformance suite draws deterministic random gambles and checks every
algebraic law the utility representation promises.  Feeding it a broken
evaluator shows the laws have teeth: summing scaled reward vectors instead
of taking their pointwise maximum is caught immediately, with a shrunken
counterexample.
"""

import json

from likelihood_gambles import GenConfig, canonical_of_value, generate_gamble, run_conformance
from likelihood_gambles import depth, dump_gamble

config = GenConfig(max_depth=4, max_branching=4, seed=2031, samples=400)

g = generate_gamble(config)
print(f"A generated gamble (depth {depth(g)}): {dump_gamble(g)[:100]}...")

report = run_conformance(config, c=0.0)
print(f"\nAll laws on the real evaluator (premium 0):\n{report.summary()}")


def summed_instead_of_maxed(gamble, premium):
    if gamble.is_constant:
        u = canonical_of_value(gamble.constant, premium)
        return u.alpha, u.beta
    alpha = beta = 0.0
    for p in gamble.prospects:
        a, b = summed_instead_of_maxed(p.reward, premium)
        alpha += p.likelihood * a
        beta += p.likelihood * b
    return alpha, beta


broken = run_conformance(
    config,
    c=0.0,
    properties=["flatten_preserves_utility", "idempotence"],
    utility_fn=summed_instead_of_maxed,
)
print(f"\nThe same laws on a sum-based mutant:\n{broken.summary()}")
first = broken.results[0]
print(f"\nShrunken counterexample for {first.name}:")
print(json.dumps(first.counterexample, indent=2))
