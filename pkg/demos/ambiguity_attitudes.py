"""How the ambiguity premium moves prices.

Every gamble reduces to a point <alpha, beta> on the border of the unit
square; alpha carries the evidence for winning 1, beta the evidence for
winning 0.  A single log-odds parameter, the decision maker's ambiguity
premium, turns that point into a price.  Premium 0 is neutral; positive
premiums pay more than 0.5 for a fair gamble, negative ones pay less.
"""

from likelihood_gambles import (
    canonical_equivalent,
    canonical_of_value,
    dump_gamble,
    implied_prior,
    price,
    utility_of_gamble,
)
from likelihood_gambles.gambles import Gamble

fair = Gamble.from_prospects([(1.0, 1.0), (1.0, 0.0)])
print(f"The fair gamble: {dump_gamble(fair)}")
print("premium   price of the fair gamble")
for c in (-2.0, -1.0, 0.0, 1.0, 2.0):
    print(f"  {c:+.1f}     {price(fair, c):.4f}")

# Quoting a price for the fair gamble reveals the premium: the price IS the
# prior a Bayesian would have needed, and its log-odds is the premium.
for quoted in (0.35, 0.5, 0.62):
    rho, attitude = implied_prior(quoted)
    print(f"quoted {quoted:.2f} -> implicit prior {rho:.2f}, {attitude}")

# Constants map onto the border: sure amounts below the premium-shifted
# center sit on the top border, amounts above it on the right border.
print("\nvalue x   alpha     beta      (premium 0)")
for x in (0.0, 0.25, 0.5, 0.75, 1.0):
    u = canonical_of_value(x, 0.0)
    print(f"  {x:.2f}    {u.alpha:.4f}   {u.beta:.4f}")

# Any gamble collapses to a two-prospect canonical equivalent with the
# same price.
g = Gamble.from_prospects([(1.0, 0.8), (0.6, 0.2), (0.3, 0.5)])
for c in (-1.0, 0.0, 1.0):
    u = utility_of_gamble(g, c)
    twin = canonical_equivalent(g, c)
    print(
        f"\npremium {c:+.0f}: utility <{u.alpha:.4f}, {u.beta:.4f}>"
        f"\n  canonical twin {dump_gamble(twin)}"
        f"\n  prices {price(g, c):.6f} == {price(twin, c):.6f}"
    )
