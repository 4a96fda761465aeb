"""Sequent validity under every consequence relation, by enumeration.

Both value spaces are chains with an order-reversing involution, so values
are encoded as integer codes: conjunction is ``min``, disjunction ``max``
and negation ``top - x``. Tuple values of width n use their binary code
(0 .. 2**n - 1); three-valued truth values use 0, 1, 2 for 0, 1/2, 1.
Whole blocks of interpretations are then evaluated at once with numpy.

Interpretations are enumerated in a fixed order: domain size ascending,
then constant assignments (constants sorted by name, elements ascending),
then predicate tables, with cells ordered by predicate name and argument
tuple and the last cell varying fastest, each cell running through the
value space in ascending order. The first countermodel in that order is
reported, and it is re-evaluated with the scalar evaluators before it is
returned.
"""
from __future__ import annotations

import enum
import functools
import itertools
import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .formula import (
    And,
    Atom,
    Forall,
    Formula,
    Not,
    Or,
    Sequent,
    Var,
    free_variables,
    is_propositional,
    signature_of,
)
from .parser import format_formula
from .structure import Structure
from .threeval import (
    ThreeDesignatedMode,
    ThreeValue,
    ThreeValuedInterpretation,
    eval3_sentence,
    is_designated3,
)
from .tuples import (
    ClemensInterpretation,
    DesignatedMode,
    TupleValue,
    eval_sentence,
    is_designated,
)

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "TUPLEVAL_BUDGET"
CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    """The interpretation space is larger than the configured budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"search needs {needed} interpretations, budget is {budget} "
            f"(set {BUDGET_ENV} to raise it)"
        )


class NotPropositional(ValueError):
    pass


class NotASentence(ValueError):
    pass


class CertificationError(AssertionError):
    """A countermodel failed re-evaluation; indicates an engine bug."""


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class Semantics(enum.Enum):
    TUPLE = "tuple"
    THREE = "three"


TUPLE_SELECTORS = ("strict", "bossy", "tolerant")
THREE_SELECTORS = ("k3", "lp", "classical")


@dataclass(frozen=True)
class ConsequenceMode:
    """Semantics plus the designated sets used on each side of the turnstile.

    Tarskian relations use one selector on both sides; the mixed st relations
    are premises-strict, conclusion-tolerant.
    """

    semantics: Semantics
    premise: str
    conclusion: str
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "semantics", Semantics(self.semantics))
        if self.semantics is Semantics.TUPLE:
            if self.n is None or self.n < 1:
                raise ValueError("tuple semantics needs a width n >= 1")
            allowed = TUPLE_SELECTORS
        else:
            if self.n is not None:
                raise ValueError("three-valued semantics takes no width")
            allowed = THREE_SELECTORS
        for sel in (self.premise, self.conclusion):
            if sel not in allowed:
                raise ValueError(f"{sel!r} is not a {self.semantics.value} designation")
        if "classical" in (self.premise, self.conclusion) and self.premise != self.conclusion:
            raise ValueError("classical consequence is Tarskian only")

    @classmethod
    def tuple_mode(cls, kind: str, n: int) -> "ConsequenceMode":
        if kind == "st":
            return cls(Semantics.TUPLE, "strict", "tolerant", n)
        return cls(Semantics.TUPLE, kind, kind, n)

    @classmethod
    def three_mode(cls, kind: str) -> "ConsequenceMode":
        if kind == "st":
            return cls(Semantics.THREE, "k3", "lp")
        return cls(Semantics.THREE, kind, kind)

    @classmethod
    def from_flags(cls, semantics: str, mode: str, n: Optional[int] = None):
        if Semantics(semantics) is Semantics.TUPLE:
            return cls.tuple_mode(mode, 2 if n is None else n)
        return cls.three_mode(mode)

    @property
    def is_mixed(self) -> bool:
        return self.premise != self.conclusion

    @property
    def kind(self) -> str:
        return "st" if self.is_mixed else self.premise

    @property
    def name(self) -> str:
        if self.semantics is Semantics.TUPLE:
            return f"tuple-{self.kind}(n={self.n})"
        return self.kind

    def __str__(self):
        return self.name

    # value space -------------------------------------------------------

    @property
    def classical(self) -> bool:
        return self.premise == "classical"

    @property
    def top(self) -> int:
        return 2**self.n - 1 if self.semantics is Semantics.TUPLE else 2

    @property
    def codes(self) -> tuple[int, ...]:
        """Value codes enumerated for this mode, ascending."""
        if self.semantics is Semantics.TUPLE:
            return tuple(range(2**self.n))
        return (0, 2) if self.classical else (0, 1, 2)

    @property
    def space_key(self):
        return (self.semantics, self.n, self.classical)

    def decode(self, code: int):
        if self.semantics is Semantics.TUPLE:
            return TupleValue.from_code(int(code), self.n)
        return ThreeValue.from_code(int(code))

    def designation_table(self, selector: str) -> np.ndarray:
        """Boolean lookup table indexed by value code."""
        c = np.arange(self.top + 1)
        if selector == "strict":
            return c == self.top
        if selector == "bossy":
            return c >= 2 ** (self.n - 1)
        if selector in ("tolerant", "lp"):
            return c > 0
        return c == 2  # k3, classical

    def designates(self, selector: str, value) -> bool:
        """Scalar designation test through the semantics modules."""
        if self.semantics is Semantics.TUPLE:
            return is_designated(value, DesignatedMode(selector))
        return is_designated3(value, ThreeDesignatedMode(selector))

    def evaluate(self, f: Formula, m: Structure):
        if self.semantics is Semantics.TUPLE:
            return eval_sentence(f, m)
        return eval3_sentence(f, m)

    def build_interpretation(self, size, constants, predicates) -> Structure:
        if self.semantics is Semantics.TUPLE:
            return ClemensInterpretation(size, constants, predicates, width=self.n)
        return ThreeValuedInterpretation(
            size, constants, predicates, classical=self.classical
        )


@dataclass
class Verdict:
    valid: bool
    mode: ConsequenceMode
    sequent: Sequent
    countermodel: Optional[Structure] = None
    formula_values: dict[str, str] = field(default_factory=dict)
    search_bound: Optional[int] = None
    interpretations_checked: int = 0

    def __bool__(self):
        return self.valid

    @property
    def assignment(self) -> dict[str, object]:
        """Propositional countermodel as a letter -> value map."""
        if self.countermodel is None:
            return {}
        return {p: t[()] for p, t in self.countermodel.predicates.items() if () in t}

    def to_json(self) -> dict:
        from .parser import format_sequent

        cm = None
        if self.countermodel is not None:
            cm = {
                k: v
                for k, v in self.countermodel.to_json().items()
                if k in ("domain_size", "constants", "predicates")
            }
            cm["formula_values"] = dict(self.formula_values)
        return {
            "sequent": format_sequent(self.sequent),
            "semantics": self.mode.semantics.value,
            "mode": self.mode.kind,
            "n": self.mode.n,
            "valid": self.valid,
            "search_bound": self.search_bound,
            "interpretations_checked": self.interpretations_checked,
            "countermodel": cm,
        }


class _Block:
    """A contiguous block of interpretations over one domain and constant map."""

    def __init__(self, rows: np.ndarray, codes: np.ndarray, top: int, cells, cmap, size):
        self.rows = rows
        self.codes = codes
        self.top = top
        self.index = {c: j for j, c in enumerate(cells)}
        self.ncells = len(cells)
        self.cmap = cmap
        self.size = size
        self._cols: dict[int, np.ndarray] = {}
        self._memo: dict = {}

    def column(self, j: int) -> np.ndarray:
        col = self._cols.get(j)
        if col is None:
            base = len(self.codes)
            digit = (self.rows // base ** (self.ncells - 1 - j)) % base
            col = self._cols[j] = self.codes[digit]
        return col

    def eval(self, f: Formula, env: dict[str, int]) -> np.ndarray:
        free = _free(f)
        key = (f.canonical, tuple(sorted((v, env[v]) for v in free if v in env)))
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            elems = tuple(
                env[t.name] if isinstance(t, Var) else self.cmap[t.name] for t in f.args
            )
            out = self.column(self.index[(f.predicate, elems)])
        elif isinstance(f, Not):
            out = self.top - self.eval(f.body, env)
        elif isinstance(f, And):
            out = np.minimum(self.eval(f.left, env), self.eval(f.right, env))
        elif isinstance(f, Or):
            out = np.maximum(self.eval(f.left, env), self.eval(f.right, env))
        else:
            ufunc = np.minimum if isinstance(f, Forall) else np.maximum
            out = self.eval(f.body, {**env, f.var: 0})
            for d in range(1, self.size):
                out = ufunc(out, self.eval(f.body, {**env, f.var: d}))
        self._memo[key] = out
        return out


@functools.lru_cache(maxsize=65536)
def _free(f: Formula) -> frozenset[str]:
    return frozenset(free_variables(f))


def _cells(sig, size: int) -> list[tuple[str, tuple[int, ...]]]:
    return [
        (p, args)
        for p, arity in sig.predicates.items()
        for args in itertools.product(range(size), repeat=arity)
    ]


def search_space_size(sequent: Sequent, mode: ConsequenceMode, sizes: Iterable[int]) -> int:
    sig = signature_of(*sequent.formulas)
    v = len(mode.codes)
    return sum(
        size ** len(sig.constants) * v ** len(_cells(sig, size)) for size in sizes
    )


def _certify(mode: ConsequenceMode, sequent: Sequent, m: Structure) -> dict[str, str]:
    values = {}
    for f in sequent.formulas:
        values[format_formula(f)] = mode.evaluate(f, m)
    prem_ok = all(
        mode.designates(mode.premise, values[format_formula(f)]) for f in sequent.premises
    )
    concl_ok = mode.designates(mode.conclusion, values[format_formula(sequent.conclusion)])
    if not prem_ok or concl_ok:
        raise CertificationError(f"countermodel for {sequent} under {mode} does not replay")
    return {k: str(v) for k, v in values.items()}


def _search(
    sequent: Sequent,
    modes: Sequence[ConsequenceMode],
    sizes: Sequence[int],
    budget: Optional[int],
    search_bound: Optional[int],
) -> list[Verdict]:
    """Run one enumeration shared by modes over the same value space."""
    first = modes[0]
    assert all(m.space_key == first.space_key for m in modes)
    budget = default_budget() if budget is None else budget
    total = search_space_size(sequent, first, sizes)
    if total > budget:
        raise BudgetExceeded(total, budget)

    sig = signature_of(*sequent.formulas)
    consts = sorted(sig.constants)
    codes = np.asarray(first.codes, dtype=np.int32)
    base = len(codes)
    tables = [
        (m.designation_table(m.premise), m.designation_table(m.conclusion)) for m in modes
    ]
    found: dict[int, tuple] = {}
    checked = 0
    for size in sizes:
        cells = _cells(sig, size)
        count = base ** len(cells)
        for assignment in itertools.product(range(size), repeat=len(consts)):
            cmap = dict(zip(consts, assignment))
            for start in range(0, count, CHUNK):
                rows = np.arange(start, min(count, start + CHUNK), dtype=np.int64)
                block = _Block(rows, codes, first.top, cells, cmap, size)
                values = [block.eval(f, {}) for f in sequent.formulas]
                for i, (ptab, ctab) in enumerate(tables):
                    if i in found:
                        continue
                    bad = ~ctab[values[-1]]
                    for v in values[:-1]:
                        bad &= ptab[v]
                    if bad.any():
                        pos = int(np.argmax(bad))
                        cell_codes = []
                        if cells:
                            digits = np.unravel_index(int(rows[pos]), (base,) * len(cells))
                            cell_codes = [int(codes[d]) for d in digits]
                        found[i] = (size, cmap, cells, cell_codes, checked + pos + 1)
                checked += len(rows)
                if len(found) == len(modes):
                    break
            if len(found) == len(modes):
                break
        if len(found) == len(modes):
            break

    verdicts = []
    for i, mode in enumerate(modes):
        if i not in found:
            verdicts.append(
                Verdict(True, mode, sequent, search_bound=search_bound,
                        interpretations_checked=checked)
            )
            continue
        size, cmap, cells, cell_codes, position = found[i]
        preds: dict[str, dict] = {}
        for (p, args), code in zip(cells, cell_codes):
            preds.setdefault(p, {})[args] = mode.decode(code)
        m = mode.build_interpretation(size, cmap, preds)
        verdicts.append(
            Verdict(False, mode, sequent, m, _certify(mode, sequent, m),
                    search_bound, position)
        )
    return verdicts


def _grouped(sequent, modes, sizes, budget, bound) -> list[Verdict]:
    out: dict[int, Verdict] = {}
    groups: dict = {}
    for i, m in enumerate(modes):
        groups.setdefault(m.space_key, []).append(i)
    for idxs in groups.values():
        res = _search(sequent, [modes[i] for i in idxs], sizes, budget, bound)
        out.update(zip(idxs, res))
    return [out[i] for i in range(len(modes))]


def check_propositional_many(
    s: Sequent, modes: Sequence[ConsequenceMode], budget: Optional[int] = None
) -> list[Verdict]:
    if not s.is_propositional():
        raise NotPropositional(f"{s} is not propositional")
    return _grouped(s, list(modes), [1], budget, None)


def check_propositional(
    s: Sequent, mode: ConsequenceMode, budget: Optional[int] = None
) -> Verdict:
    """Decide `s` by enumerating every value assignment to its atoms."""
    return check_propositional_many(s, [mode], budget)[0]


def check_first_order_bounded_many(
    s: Sequent,
    modes: Sequence[ConsequenceMode],
    max_domain: int,
    budget: Optional[int] = None,
) -> list[Verdict]:
    if max_domain < 1:
        raise ValueError("max_domain must be at least 1")
    for f in s.formulas:
        if free_variables(f):
            raise NotASentence(f"{format_formula(f)} has free variables")
    return _grouped(s, list(modes), list(range(1, max_domain + 1)), budget, max_domain)


def check_first_order_bounded(
    s: Sequent, mode: ConsequenceMode, max_domain: int, budget: Optional[int] = None
) -> Verdict:
    """Search for a countermodel with at most `max_domain` elements.

    A valid verdict only means no countermodel exists up to that size.
    """
    return check_first_order_bounded_many(s, [mode], max_domain, budget)[0]


def check(s: Sequent, mode: ConsequenceMode, max_domain: int = 2,
          budget: Optional[int] = None) -> Verdict:
    """Exhaustive for propositional sequents, bounded otherwise."""
    if s.is_propositional():
        return check_propositional(s, mode, budget)
    return check_first_order_bounded(s, mode, max_domain, budget)


@dataclass(frozen=True)
class TableRow:
    assignment: dict
    value: object
    premise_designated: bool
    conclusion_designated: bool

    @property
    def designated(self) -> bool:
        return self.conclusion_designated


def designated_atoms_table(
    f: Formula, mode: ConsequenceMode, atom_limit: int = 8
) -> list[TableRow]:
    """Truth table of `f`: one row per assignment, in enumeration order.

    Each row carries the value of `f` and whether the mode designates it on
    the premise side and on the conclusion side (the same for Tarskian modes).
    """
    if not is_propositional(f):
        raise NotPropositional(f"{format_formula(f)} is not propositional")
    letters = sorted(signature_of(f).predicates)
    if len(letters) > atom_limit:
        raise ValueError(f"{len(letters)} atoms exceeds the limit of {atom_limit}")
    space = [mode.decode(c) for c in mode.codes]
    rows = []
    for combo in itertools.product(space, repeat=len(letters)):
        v = dict(zip(letters, combo))
        m = mode.build_interpretation(1, {}, {p: {(): x} for p, x in v.items()})
        val = mode.evaluate(f, m)
        rows.append(
            TableRow(v, val, mode.designates(mode.premise, val),
                     mode.designates(mode.conclusion, val))
        )
    return rows


# corpus-scale checking ------------------------------------------------


def designation_masks(
    formulas: Sequence[Formula], letters: Sequence[str], mode: ConsequenceMode
) -> tuple[np.ndarray, np.ndarray]:
    """Premise- and conclusion-side designation of each formula under each
    assignment to `letters`, as two bool arrays of shape (formulas, assignments)."""
    codes = np.asarray(mode.codes, dtype=np.int32)
    count = len(codes) ** len(letters)
    rows = np.arange(count, dtype=np.int64)
    cells = [(p, ()) for p in letters]
    block = _Block(rows, codes, mode.top, cells, {}, 1)
    vals = np.stack([block.eval(f, {}) for f in formulas]) if formulas else np.zeros((0, count), np.int32)
    return mode.designation_table(mode.premise)[vals], mode.designation_table(mode.conclusion)[vals]


def premise_sets(num_formulas: int, max_premises: int) -> list[tuple[int, ...]]:
    """All premise index sets of size <= max_premises, smallest first."""
    out = []
    for k in range(max_premises + 1):
        out.extend(itertools.combinations(range(num_formulas), k))
    return out


def validity_matrix(
    formulas: Sequence[Formula],
    letters: Sequence[str],
    mode: ConsequenceMode,
    max_premises: int = 2,
) -> np.ndarray:
    """Verdicts for every sequent with premises and conclusion from `formulas`.

    Row r corresponds to ``premise_sets(len(formulas), max_premises)[r]``,
    column k to conclusion ``formulas[k]``. Enumeration is over all
    assignments to `letters`, which must include every atom used.
    """
    prem, concl = designation_masks(formulas, letters, mode)
    nf, nrows = prem.shape
    failing = (~concl).T.astype(np.float32)  # (assignments, conclusions)
    blocks = []
    for k in range(max_premises + 1):
        combos = list(itertools.combinations(range(nf), k))
        if not combos:
            continue
        for lo in range(0, len(combos), 4096):
            chunk = combos[lo : lo + 4096]
            idx = np.asarray(chunk, dtype=np.int64).reshape(len(chunk), k)
            held = np.ones((len(idx), nrows), dtype=bool)
            for col in range(k):
                held &= prem[idx[:, col]]
            blocks.append((held.astype(np.float32) @ failing) == 0)
    return np.concatenate(blocks) if blocks else np.zeros((0, nf), dtype=bool)


def corpus_size(num_formulas: int, max_premises: int) -> int:
    return sum(math.comb(num_formulas, k) for k in range(max_premises + 1)) * num_formulas
