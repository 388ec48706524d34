"""
Searching for complements
=========================

For an ideal with a nonzero Betti number in the top lattice degree, the
complement question asks for two lattice elements with Betti numbers in
degrees a and b whose gcd is outside the ideal and whose lcm is the top.
The searchers below look for witnesses exhaustively and flag any instance
where none exists.
"""

# %%
import random

from syzygy import MonomialIdeal, search_question_complements
from syzygy.errors import HypothesisError
from syzygy.sampling import random_squarefree_ideal

I = MonomialIdeal.parse("ac bc ad bd ae be cde", "abcde")
for rec in search_question_complements(I, limit=3):
    pairs = ", ".join(f"({I.format(m)}, {I.format(m2)})" for m, m2 in rec.witnesses)
    print(f"i={rec.i} a={rec.a} b={rec.b}: {pairs}")

# %%
rng = random.Random(3)
tested = empty = 0
for _ in range(200):
    J = random_squarefree_ideal(rng, 6, rng.randint(2, 6), min_deg=2)
    try:
        records = search_question_complements(J)
    except HypothesisError:
        continue
    tested += 1
    if any(r.none_found for r in records):
        empty += 1
        print("no witness for", J)
print(f"{tested} ideals with a top Betti number, {empty} without a witness")

# %%
# The same search from the command line, with a replayable JSON-lines archive:
#
#   syzygy search --random n=6 gens=5 trials=100 seed=3 --question 2.6
