"""
Explosion and excluded middle under every relation
==================================================

Each tuple relation is checked at widths 2 and 3 next to its three-valued
partner. Invalid verdicts carry a countermodel that has already been
re-evaluated by the scalar evaluators.
"""

from tupleval.consequence import ConsequenceMode, check_propositional
from tupleval.parser import parse_sequent

pairs = [("strict", "k3"), ("bossy", "classical"), ("tolerant", "lp"), ("st", "st")]

for text in ("p, ~p |- q", "|- p | ~p", "p & ~p |- q | ~q"):
    s = parse_sequent(text)
    print(text)
    for tkind, three in pairs:
        row = []
        for mode in (ConsequenceMode.tuple_mode(tkind, 2), ConsequenceMode.tuple_mode(tkind, 3),
                     ConsequenceMode.three_mode(three)):
            v = check_propositional(s, mode)
            row.append(f"{mode.name}: {'valid' if v.valid else 'invalid'}")
        print("  " + "; ".join(row))

# a countermodel up close
v = check_propositional(parse_sequent("p, ~p |- q"), ConsequenceMode.tuple_mode("tolerant", 2))
print("\ncountermodel for explosion under tolerant:", {k: str(x) for k, x in v.assignment.items()})
print("formula values:", v.formula_values)
