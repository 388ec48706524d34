"""
Subadditivity at the top degree
===============================

For a monomial ideal generated in degree at least d in n variables, write
i = n - d + 1.  When beta_{i,n} is nonzero, the maximal shifts satisfy
t_i <= t_a + t_b for every split i = a + b.  This script sweeps random
ideals and prints the checks.
"""

# %%
import random

from syzygy import MonomialIdeal, check_subadditivity_at_top
from syzygy.sampling import random_monomial_ideal

for text in ["abc ace ade bcd bde", "ac bc ad bd ae be cde"]:
    print("\n".join(check_subadditivity_at_top(MonomialIdeal.parse(text, "abcde")).lines()), end="\n\n")

# %%
rng = random.Random(2)
met = violations = 0
for _ in range(300):
    I = random_monomial_ideal(rng, rng.randint(2, 6), rng.randint(2, 5), max_exp=2)
    report = check_subadditivity_at_top(I)
    met += report.hypothesis_met
    violations += report.hypothesis_met and not report.passed
print(f"hypothesis met on {met} of 300 ideals, violations: {violations}")
