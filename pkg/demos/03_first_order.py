"""
Bounded countermodel search with quantifiers
============================================

Interpretations are enumerated over domains of size 1..k. A valid verdict
only says no countermodel exists up to k elements.
"""

import json

from tupleval.consequence import BudgetExceeded, ConsequenceMode, check_first_order_bounded
from tupleval.parser import parse_sequent

bossy = ConsequenceMode.tuple_mode("bossy", 2)

# a universal yields each instance
v = check_first_order_bounded(parse_sequent("forall x. P(x) |- P(c)"), bossy, 3)
print("forall x. P(x) |- P(c):", v.valid, f"({v.interpretations_checked} interpretations)")

# an existential does not yield a universal; the countermodel needs two elements
v = check_first_order_bounded(parse_sequent("exists x. P(x) |- forall x. P(x)"), bossy, 2)
print(json.dumps(v.to_json()["countermodel"], indent=2))

# the search refuses rather than hanging when the space is too large
s = parse_sequent("forall x. exists y. R(x, y) |- exists x. R(x, x)")
strict3 = ConsequenceMode.tuple_mode("strict", 3)
print("\nwith budget 10000:", check_first_order_bounded(s, strict3, 2, budget=10_000).valid)
try:
    check_first_order_bounded(s, strict3, 2, budget=1000)
except BudgetExceeded as e:
    print("with budget 1000:", e)
