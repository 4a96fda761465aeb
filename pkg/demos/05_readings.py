"""
Reading tuple values in words
=============================

The same bits read as two-part verdicts, as a panel of agents, or as
respects in which a predicate applies.
"""

from tupleval.readings import ReadingScheme, explain
from tupleval.tuples import all_values

pairs = ReadingScheme.default("clemens", 2)
for v in reversed(all_values(2)):
    print(f"{v}: {explain(v, pairs)}")

print()
panel = ReadingScheme("agents", ("the judge", "the jury", "the press"))
for v in ("111", "110", "000"):
    print(f"{v}: {explain(v, panel)}")

print()
respects = ReadingScheme("respects", ("gender", "the stereotype"), predicate="a man")
for v in ("11", "10", "01"):
    print(f"{v}: {explain(v, respects)}")
