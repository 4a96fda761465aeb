"""
Collapsing tuples to three values
=================================

Sending all-ones to 1, all-zeros to 0 and the rest to 1/2 preserves top and
bottom for every sentence. That is enough to make each tuple relation agree
with its three-valued partner, which this script checks on a corpus.
"""

import time

from tupleval.threeval import HALF, neg3
from tupleval.translation import (
    embed_value,
    run_first_order_theorem_suite,
    run_lemma_suites,
    run_propositional_theorem_suite,
)
from tupleval.tuples import tuple_neg

# the reverse embedding is not a homomorphism: the middle value is not kept
middle = embed_value(HALF, 3)
print(f"embed(1/2)={middle}, -embed(1/2)={tuple_neg(middle)}, embed(-1/2)={embed_value(neg3(HALF), 3)}")

t0 = time.perf_counter()
for report in run_lemma_suites(samples=2000, seed=1):
    print(f"lemma {report.lemma}: {report.checked} pairs, {len(report.failures)} failures")

for n in (2, 3):
    rep = run_propositional_theorem_suite(n)
    for key, res in rep.results.items():
        print(f"{key}: {res['checked']} sequents, {res['valid']} valid, {res['disagreements']} disagreements")

rep = run_first_order_theorem_suite(samples=200, seed=3)
print(f"first-order: {rep.checked} comparisons, {rep.disagreements} disagreements")
print(f"({time.perf_counter() - t0:.1f}s)")
