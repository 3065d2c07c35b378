"""Two coin experiments, one gamble.

A bet's value under competing models is captured by pairing each model's
normalized likelihood of the observed data with the bet's expected utility
under that model.  Two experiments with different coins, different
observations, and different stakes can therefore be worth exactly the same.
"""

from likelihood_gambles import (
    ModelSpec,
    build_gamble,
    depth,
    dump_gamble,
    expected_utility,
    flatten,
    price,
)
from likelihood_gambles.gambles import Gamble

# Experiment 1: a fair coin or a 4:6 coin is tossed and lands head.
# The bet pays 1 if the NEXT toss of the selected coin lands head.
fair = ModelSpec({"head": 0.5, "tail": 0.5}, {"head": 1.0, "tail": 0.0})
bias = ModelSpec({"head": 0.4, "tail": 0.6}, {"head": 1.0, "tail": 0.0})

print("Expected utility of the bet under each coin:")
print(f"  fair coin: {expected_utility(fair)}")
print(f"  4:6 coin:  {expected_utility(bias)}")

# Evidence: probability of the observed head under each coin.
experiment_1 = build_gamble([fair, bias], [0.5, 0.4])
print(f"\nExperiment 1 gamble: {dump_gamble(experiment_1)}")

# Experiment 2: a double-tail coin or a 2:8 coin lands tail, and the bet
# pays 0.5 if the next toss lands tail.  Different coins, different data,
# different stakes.
double_tail = ModelSpec({"head": 0.0, "tail": 1.0}, {"head": 0.0, "tail": 0.5})
two_eight = ModelSpec({"head": 0.2, "tail": 0.8}, {"head": 0.0, "tail": 0.5})
experiment_2 = build_gamble([double_tail, two_eight], [1.0, 0.8])
print(f"Experiment 2 gamble: {dump_gamble(experiment_2)}")

print(f"\nSame gamble?  {experiment_1 == experiment_2}")
for c in (-1.0, 0.0, 1.0):
    print(f"  price at premium {c:+.0f}: {price(experiment_1, c):.6f}")

# Rewards can be gambles themselves; flatten multiplies likelihoods down
# each path and merges duplicate rewards, without changing the price.
nested = Gamble.from_prospects([(1.0, experiment_1), (0.3, 0.1)])
print(f"\nNested gamble (depth {depth(nested)}): {dump_gamble(nested)}")
flat = flatten(nested)
print(f"Flattened (depth {depth(flat)}):        {dump_gamble(flat)}")
print(f"Price unchanged: {price(nested, 0.0):.6f} == {price(flat, 0.0):.6f}")
