"""Translations between tuple and three-valued interpretations.

``collapse`` sends all-ones to 1, all-zeros to 0 and every other tuple to
1/2. ``embed`` sends 1, 1/2, 0 to ``11..1``, ``11..10`` and ``00..0``. Both
keep the domain and the constant map. For every sentence the two sides agree
on which values are top and which are bottom, and that is what makes each
tuple consequence relation coincide with its three-valued partner:

    strict  <-> K3
    bossy   <-> classical
    tolerant <-> LP
    st (tuple) <-> st (three-valued)

This module checks those facts by direct evaluation over generated corpora.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional, Sequence

import numpy as np

from .consequence import (
    ConsequenceMode,
    check_first_order_bounded_many,
    check_propositional_many,
    premise_sets,
    validity_matrix,
)
from .formula import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    Sequent,
    Signature,
    Var,
    enumerate_formulas,
    prop_signature,
    propositional_letters,
)
from .parser import format_formula, format_sequent
from .threeval import HALF, ONE, ZERO, ThreeValue, ThreeValuedInterpretation, eval3_sentence
from .tuples import ClemensInterpretation, TupleValue, eval_sentence


def collapse_value(a: TupleValue) -> ThreeValue:
    if all(a.bits):
        return ONE
    if not any(a.bits):
        return ZERO
    return HALF


def embed_value(a: ThreeValue, n: int) -> TupleValue:
    if n < 2:
        raise ValueError("embedding 1/2 needs width n >= 2")
    if a is ONE:
        return TupleValue.top(n)
    if a is ZERO:
        return TupleValue.bottom(n)
    return TupleValue((1,) * (n - 1) + (0,))


def collapse_interpretation(m: ClemensInterpretation) -> ThreeValuedInterpretation:
    return m.map_values(collapse_value, ThreeValuedInterpretation)


def embed_interpretation(m: ThreeValuedInterpretation, n: int) -> ClemensInterpretation:
    if n < 2:
        raise ValueError("embedding 1/2 needs width n >= 2")
    return m.map_values(lambda v: embed_value(v, n), ClemensInterpretation, width=n)


@dataclass
class LemmaCheck:
    """Outcome of comparing one sentence across a translated interpretation pair."""

    sentence: str
    tuple_value: str
    three_value: str
    top_agrees: bool
    bottom_agrees: bool

    @property
    def passed(self) -> bool:
        return self.top_agrees and self.bottom_agrees


def _compare(s: Formula, tv: TupleValue, v3: ThreeValue) -> LemmaCheck:
    return LemmaCheck(
        format_formula(s),
        str(tv),
        str(v3),
        (v3 is ONE) == all(tv.bits),
        (v3 is ZERO) == (not any(tv.bits)),
    )


def verify_lemma_cto3(m: ClemensInterpretation, s: Formula) -> LemmaCheck:
    """Evaluate `s` in `m` and in its collapse; compare the endpoints."""
    return _compare(s, eval_sentence(s, m), eval3_sentence(s, collapse_interpretation(m)))


def verify_lemma_3toc(m: ThreeValuedInterpretation, s: Formula, n: int) -> LemmaCheck:
    """Evaluate `s` in `m` and in its width-`n` embedding; compare the endpoints."""
    return _compare(s, eval_sentence(s, embed_interpretation(m, n)), eval3_sentence(s, m))


@dataclass
class LemmaReport:
    lemma: str
    seed: int
    params: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, check: LemmaCheck, interpretation) -> None:
        self.checked += 1
        if not check.passed:
            self.failures.append(
                {"check": asdict(check), "interpretation": interpretation.to_json()}
            )

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "seed": self.seed,
            "params": dict(self.params),
            "checked": self.checked,
            "failures": list(self.failures),
        }


# random generation -----------------------------------------------------

LEMMA_SIGNATURE = Signature({"P": 1, "Q": 1, "R": 2, "p": 0}, frozenset({"a", "b"}))
VARIABLES = ("x", "y", "z")


def random_formula(
    rng: random.Random,
    sig: Signature,
    max_depth: int = 4,
    max_quant_depth: int = 2,
    bound: tuple[str, ...] = (),
) -> Formula:
    """Random formula whose free variables all lie in `bound`.

    Bound variables are drawn from x, y, z, so shadowing occurs.
    """
    terms = [Var(v) for v in dict.fromkeys(bound)] + [Const(c) for c in sorted(sig.constants)]
    usable = [p for p, k in sig.predicates.items() if k == 0 or terms]
    can_quant = max_quant_depth > 0 and max_depth > 0
    if not usable and not can_quant:
        raise ValueError("signature admits no atom here")
    if max_depth == 0 or (usable and rng.random() < 0.3):
        if not usable:
            return _random_quant(rng, sig, max_depth, max_quant_depth, bound)
        p = rng.choice(usable)
        args = tuple(rng.choice(terms) for _ in range(sig.predicates[p]))
        return Atom(p, args)
    ops = ["not", "and", "or"] + (["quant", "quant"] if can_quant else [])
    op = rng.choice(ops) if usable else "quant"
    sub = max_depth - 1
    if op == "not":
        return Not(random_formula(rng, sig, sub, max_quant_depth, bound))
    if op in ("and", "or"):
        cls = And if op == "and" else Or
        return cls(
            random_formula(rng, sig, sub, max_quant_depth, bound),
            random_formula(rng, sig, sub, max_quant_depth, bound),
        )
    return _random_quant(rng, sig, max_depth, max_quant_depth, bound)


def _random_quant(rng, sig, max_depth, max_quant_depth, bound):
    var = rng.choice(VARIABLES)
    body = random_formula(rng, sig, max_depth - 1, max_quant_depth - 1, bound + (var,))
    return (Forall if rng.random() < 0.5 else Exists)(var, body)


def random_clemens_interpretation(
    rng: random.Random, sig: Signature, size: int, n: int
) -> ClemensInterpretation:
    consts = {c: rng.randrange(size) for c in sorted(sig.constants)}
    preds = {
        p: {
            args: TupleValue.from_code(rng.randrange(2**n), n)
            for args in itertools.product(range(size), repeat=k)
        }
        for p, k in sig.predicates.items()
    }
    return ClemensInterpretation(size, consts, preds, width=n)


def random_three_interpretation(
    rng: random.Random, sig: Signature, size: int
) -> ThreeValuedInterpretation:
    consts = {c: rng.randrange(size) for c in sorted(sig.constants)}
    preds = {
        p: {
            args: rng.choice((ZERO, HALF, ONE))
            for args in itertools.product(range(size), repeat=k)
        }
        for p, k in sig.predicates.items()
    }
    return ThreeValuedInterpretation(size, consts, preds)


def run_lemma_suites(
    samples: int = 10_000,
    seed: int = 0,
    widths: Sequence[int] = (2, 3),
    max_domain: int = 3,
    max_depth: int = 4,
    max_quant_depth: int = 2,
    sig: Signature = LEMMA_SIGNATURE,
) -> list[LemmaReport]:
    """Check both translation lemmas on `samples` random pairs each."""
    params = {
        "samples": samples,
        "widths": list(widths),
        "max_domain": max_domain,
        "max_depth": max_depth,
        "max_quant_depth": max_quant_depth,
        "signature": {"predicates": dict(sig.predicates), "constants": sorted(sig.constants)},
    }
    cto3 = LemmaReport("cto3", seed, params)
    to_c = LemmaReport("3toc", seed, params)
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.choice(widths)
        size = rng.randint(1, max_domain)
        s = random_formula(rng, sig, max_depth, max_quant_depth)
        m = random_clemens_interpretation(rng, sig, size, n)
        cto3.record(verify_lemma_cto3(m, s), m)
        m3 = random_three_interpretation(rng, sig, size)
        to_c.record(verify_lemma_3toc(m3, s, n), m3)
    return [cto3, to_c]


# theorems ---------------------------------------------------------------

PAIRINGS = {
    "strict": ("strict", "k3"),
    "bossy": ("bossy", "classical"),
    "tolerant": ("tolerant", "lp"),
    "st": ("st", "st"),
}


def paired_modes(pairing: str, n: int) -> tuple[ConsequenceMode, ConsequenceMode]:
    tkind, three = PAIRINGS[pairing]
    return ConsequenceMode.tuple_mode(tkind, n), ConsequenceMode.three_mode(three)


def verify_theorem_on_sequent(
    s: Sequent, n: int, pairing: str, max_domain: int = 2
) -> bool:
    """Do the tuple relation and its three-valued partner agree on `s`?

    Propositional sequents are decided exhaustively; first-order ones are
    compared at the same domain bound.
    """
    modes = paired_modes(pairing, n)
    if s.is_propositional():
        a, b = check_propositional_many(s, modes)
    else:
        a, b = check_first_order_bounded_many(s, modes, max_domain)
    return a.valid == b.valid


@dataclass
class TheoremReport:
    corpus: str
    seed: Optional[int]
    params: dict
    results: dict = field(default_factory=dict)

    def _slot(self, key: str) -> dict:
        return self.results.setdefault(
            key, {"checked": 0, "valid": 0, "disagreements": 0, "examples": []}
        )

    def record(self, key: str, sequent_text: str, tuple_valid: bool, three_valid: bool):
        slot = self._slot(key)
        slot["checked"] += 1
        slot["valid"] += int(tuple_valid)
        if tuple_valid != three_valid:
            slot["disagreements"] += 1
            if len(slot["examples"]) < 10:
                slot["examples"].append(
                    {"sequent": sequent_text, "tuple": tuple_valid, "three": three_valid}
                )

    @property
    def checked(self) -> int:
        return sum(r["checked"] for r in self.results.values())

    @property
    def disagreements(self) -> int:
        return sum(r["disagreements"] for r in self.results.values())

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def to_json(self) -> dict:
        return {
            "corpus": self.corpus,
            "seed": self.seed,
            "params": dict(self.params),
            "checked": self.checked,
            "disagreements": self.disagreements,
            "results": self.results,
        }


def propositional_corpus(depth: int, atoms: int) -> tuple[list[str], list[Formula]]:
    letters = propositional_letters(atoms)
    return letters, list(enumerate_formulas(prop_signature(letters), depth, atoms))


def run_propositional_theorem_suite(
    n: int,
    depth: int = 2,
    atoms: int = 2,
    max_premises: int = 2,
    pairings: Sequence[str] = tuple(PAIRINGS),
) -> TheoremReport:
    """Compare verdict matrices over every sequent of the enumerated corpus."""
    letters, formulas = propositional_corpus(depth, atoms)
    report = TheoremReport(
        "propositional",
        None,
        {"n": n, "depth": depth, "atoms": atoms, "max_premises": max_premises,
         "formulas": len(formulas)},
    )
    sets = None
    for pairing in pairings:
        tmode, three = paired_modes(pairing, n)
        a = validity_matrix(formulas, letters, tmode, max_premises)
        b = validity_matrix(formulas, letters, three, max_premises)
        slot = report._slot(f"{pairing}(n={n})")
        slot["checked"] += a.size
        slot["valid"] += int(a.sum())
        diff = np.argwhere(a != b)
        slot["disagreements"] += len(diff)
        if len(diff):
            sets = sets or premise_sets(len(formulas), max_premises)
            for r, k in diff[:10]:
                seq = Sequent(tuple(formulas[i] for i in sets[r]), formulas[k])
                slot["examples"].append(
                    {"sequent": format_sequent(seq), "tuple": bool(a[r, k]),
                     "three": bool(b[r, k])}
                )
    return report


FO_SIGNATURES = (
    Signature({"P": 1}, frozenset()),
    Signature({"P": 1}, frozenset({"c"})),
    Signature({"P": 1, "Q": 1}, frozenset()),
    Signature({"P": 1, "Q": 1}, frozenset({"c"})),
    Signature({"R": 2}, frozenset()),
    Signature({"R": 2}, frozenset({"c"})),
    Signature({"P": 1, "R": 2}, frozenset()),
)


def random_sequent(
    rng: random.Random,
    sig: Signature,
    max_premises: int = 2,
    max_depth: int = 3,
    max_quant_depth: int = 2,
) -> Sequent:
    k = rng.randint(0, max_premises)
    fs = [random_formula(rng, sig, max_depth, max_quant_depth) for _ in range(k + 1)]
    return Sequent(tuple(fs[:-1]), fs[-1])


def random_first_order_sequents(
    count: int, seed: int, signatures: Sequence[Signature] = FO_SIGNATURES, **kw
) -> Iterator[Sequent]:
    """Reproducible stream of random sentences-only sequents, all quantified."""
    rng = random.Random(seed)
    made = 0
    while made < count:
        s = random_sequent(rng, rng.choice(signatures), **kw)
        if s.is_propositional():
            continue
        made += 1
        yield s


def run_first_order_theorem_suite(
    samples: int = 1000,
    seed: int = 0,
    widths: Sequence[int] = (2, 3),
    max_domain: int = 2,
    pairings: Sequence[str] = tuple(PAIRINGS),
) -> TheoremReport:
    """Bounded comparison of every pairing on random first-order sequents."""
    report = TheoremReport(
        "first-order",
        seed,
        {"samples": samples, "widths": list(widths), "max_domain": max_domain},
    )
    for s in random_first_order_sequents(samples, seed):
        text = format_sequent(s)
        three = [paired_modes(p, 2)[1] for p in pairings]
        three_verdicts = check_first_order_bounded_many(s, three, max_domain)
        for n in widths:
            tmodes = [paired_modes(p, n)[0] for p in pairings]
            tuple_verdicts = check_first_order_bounded_many(s, tmodes, max_domain)
            for p, tv, hv in zip(pairings, tuple_verdicts, three_verdicts):
                report.record(f"{p}(n={n})", text, tv.valid, hv.valid)
    return report


def theorem_pairings_for_sequent(s: Sequent, n: int, max_domain: int = 2) -> dict[str, tuple]:
    """Verdict pairs for every pairing on one sequent (used by the CLI)."""
    out = {}
    for p in PAIRINGS:
        tmode, three = paired_modes(p, n)
        if s.is_propositional():
            a, b = check_propositional_many(s, [tmode, three])
        else:
            a, b = check_first_order_bounded_many(s, [tmode, three], max_domain)
        out[p] = (a, b)
    return out
