"""
Truth tables for pairs and for three values
===========================================

Pairs of bits ordered lexicographically, with bitwise flip as negation and
min/max as conjunction/disjunction, next to the strong Kleene tables.
"""

from tupleval.consequence import ConsequenceMode, designated_atoms_table
from tupleval.parser import parse_formula
from tupleval.tuples import all_values, tuple_join, tuple_meet, tuple_neg

# the four pair values, smallest first
vals = all_values(2)
print("order:", " < ".join(str(v) for v in vals))

# conjunction and disjunction as min and max in that order
print("\n  &  " + " ".join(str(b) for b in reversed(vals)))
for a in reversed(vals):
    print(f"  {a} " + " ".join(str(tuple_meet(a, b)) for b in reversed(vals)))
print("\n  |  " + " ".join(str(b) for b in reversed(vals)))
for a in reversed(vals):
    print(f"  {a} " + " ".join(str(tuple_join(a, b)) for b in reversed(vals)))

# negation flips every bit, so it reverses the order
print("\nnegation:", ", ".join(f"{a}->{tuple_neg(a)}" for a in vals))

# the same table through the consequence machinery, with designation flags
for mode in (ConsequenceMode.tuple_mode("tolerant", 2), ConsequenceMode.three_mode("lp")):
    print(f"\np & ~p under {mode}:")
    for row in designated_atoms_table(parse_formula("p & ~p"), mode):
        print(f"  p={row.assignment['p']!s:4} value={row.value!s:4} designated={row.designated}")
