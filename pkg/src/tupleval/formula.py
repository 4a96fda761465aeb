"""Abstract syntax for propositional and first-order formulas.

Formulas are immutable trees built from atoms ``P(t1, ..., tk)``, negation,
binary conjunction and disjunction, and the two quantifiers. Terms are either
variables or constants; there are no function symbols.

Equality and hashing of formulas are modulo renaming of bound variables, so
``forall x. P(x) == forall y. P(y)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Union


class SignatureError(ValueError):
    """A formula does not fit a signature."""


class ArityError(SignatureError):
    """A predicate is used with the wrong number of arguments."""


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be non-empty")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("constant name must be non-empty")

    def __str__(self):
        return self.name


Term = Union[Var, Const]


class Formula:
    """Base class of the formula node types."""

    __slots__ = ()

    def _key(self, bound: tuple[str, ...]):
        raise NotImplementedError

    @cached_property
    def canonical(self):
        # bound variables become their de Bruijn index
        return self._key(())

    def __eq__(self, other):
        if not isinstance(other, Formula):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self):
        from .parser import format_formula

        return format_formula(self)

    # builder sugar, handy in tests and demos
    def __invert__(self):
        return Not(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)


def _term_key(t: Term, bound: tuple[str, ...]):
    if isinstance(t, Var):
        for depth, name in enumerate(reversed(bound)):
            if name == t.name:
                return ("b", depth)
        return ("v", t.name)
    return ("c", t.name)


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    predicate: str
    args: tuple[Term, ...] = ()

    def __post_init__(self):
        if not self.predicate:
            raise ValueError("predicate name must be non-empty")
        object.__setattr__(self, "args", tuple(self.args))

    @property
    def arity(self) -> int:
        return len(self.args)

    def _key(self, bound):
        return ("atom", self.predicate, tuple(_term_key(t, bound) for t in self.args))


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula

    def _key(self, bound):
        return ("not", self.body._key(bound))


@dataclass(frozen=True, eq=False)
class And(Formula):
    left: Formula
    right: Formula

    def _key(self, bound):
        return ("and", self.left._key(bound), self.right._key(bound))


@dataclass(frozen=True, eq=False)
class Or(Formula):
    left: Formula
    right: Formula

    def _key(self, bound):
        return ("or", self.left._key(bound), self.right._key(bound))


@dataclass(frozen=True, eq=False)
class Forall(Formula):
    var: str
    body: Formula

    def _key(self, bound):
        return ("forall", self.body._key(bound + (self.var,)))


@dataclass(frozen=True, eq=False)
class Exists(Formula):
    var: str
    body: Formula

    def _key(self, bound):
        return ("exists", self.body._key(bound + (self.var,)))


Quantified = (Forall, Exists)
Binary = (And, Or)


def atom(name: str, *args: str | Term) -> Atom:
    """Build an atom; string arguments from ``u``-``z`` become variables."""
    terms = []
    for a in args:
        if isinstance(a, (Var, Const)):
            terms.append(a)
        elif is_variable_name(a):
            terms.append(Var(a))
        else:
            terms.append(Const(a))
    return Atom(name, tuple(terms))


def is_variable_name(name: str) -> bool:
    """Default lexical convention for variables: starts with u..z."""
    return bool(name) and name[0] in "uvwxyz"


@dataclass(frozen=True)
class Sequent:
    premises: tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self):
        # premises form a set; keep first-occurrence order for stable output
        object.__setattr__(self, "premises", tuple(dict.fromkeys(self.premises)))

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return self.premises + (self.conclusion,)

    def is_propositional(self) -> bool:
        return all(is_propositional(f) for f in self.formulas)

    def is_closed(self) -> bool:
        return all(not free_variables(f) for f in self.formulas)

    def signature(self) -> "Signature":
        return signature_of(*self.formulas)

    def __str__(self):
        from .parser import format_sequent

        return format_sequent(self)


@dataclass(frozen=True)
class Signature:
    predicates: Mapping[str, int] = field(default_factory=dict)
    constants: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "predicates", dict(sorted(self.predicates.items())))
        object.__setattr__(self, "constants", frozenset(self.constants))
        for name, arity in self.predicates.items():
            if arity < 0:
                raise ValueError(f"negative arity for {name}")

    def __hash__(self):
        return hash((tuple(self.predicates.items()), self.constants))

    def merge(self, other: "Signature") -> "Signature":
        preds = dict(self.predicates)
        for name, arity in other.predicates.items():
            if preds.setdefault(name, arity) != arity:
                raise ArityError(
                    f"predicate {name} used with arities {preds[name]} and {arity}"
                )
        return Signature(preds, self.constants | other.constants)

    def check(self, f: Formula) -> None:
        """Raise SignatureError unless every atom of `f` is declared with its arity."""
        for a in atoms(f):
            if a.predicate not in self.predicates:
                raise SignatureError(f"unknown predicate {a.predicate}")
            if self.predicates[a.predicate] != a.arity:
                raise ArityError(
                    f"predicate {a.predicate} has arity {self.predicates[a.predicate]}, "
                    f"used with {a.arity} arguments"
                )

    def ground_atoms(self) -> list[Atom]:
        consts = sorted(self.constants)
        out = []
        for name, arity in self.predicates.items():
            for args in itertools.product(consts, repeat=arity):
                out.append(Atom(name, tuple(Const(c) for c in args)))
        return out


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, (Not, Forall, Exists)):
        yield from subformulas(f.body)
    elif isinstance(f, (And, Or)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms(f: Formula) -> Iterator[Atom]:
    for g in subformulas(f):
        if isinstance(g, Atom):
            yield g


def free_variables(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Var)}
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or)):
        return free_variables(f.left) | free_variables(f.right)
    return free_variables(f.body) - {f.var}


def all_variables(f: Formula) -> set[str]:
    """Every variable name occurring in `f`, free, bound or as a binder."""
    out = set()
    for g in subformulas(f):
        if isinstance(g, Atom):
            out.update(t.name for t in g.args if isinstance(t, Var))
        elif isinstance(g, Quantified):
            out.add(g.var)
    return out


def constants_of(f: Formula) -> set[str]:
    return {t.name for a in atoms(f) for t in a.args if isinstance(t, Const)}


def is_propositional(f: Formula) -> bool:
    return all(
        not isinstance(g, Quantified) and not (isinstance(g, Atom) and g.args)
        for g in subformulas(f)
    )


def is_sentence(f: Formula) -> bool:
    return not free_variables(f)


def depth(f: Formula) -> int:
    """Connective nesting depth; atoms have depth 0."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, (Not, Forall, Exists)):
        return 1 + depth(f.body)
    return 1 + max(depth(f.left), depth(f.right))


def quantifier_depth(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    if isinstance(f, (And, Or)):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    return 1 + quantifier_depth(f.body)


def signature_of(*formulas: Formula) -> Signature:
    """Predicates (with arities) and constants occurring in the formulas."""
    preds: dict[str, int] = {}
    consts: set[str] = set()
    for f in formulas:
        for a in atoms(f):
            if preds.setdefault(a.predicate, a.arity) != a.arity:
                raise ArityError(
                    f"predicate {a.predicate} used with arities "
                    f"{preds[a.predicate]} and {a.arity}"
                )
        consts |= constants_of(f)
    return Signature(preds, frozenset(consts))


def _fresh(base: str, avoid: set[str]) -> str:
    for i in itertools.count(1):
        cand = f"{base}{i}"
        if cand not in avoid:
            return cand


def substitute(f: Formula, x: str, t: Term) -> Formula:
    """Replace the free occurrences of variable `x` in `f` by the term `t`.

    Binders that would capture `t` are renamed to ``<name><k>`` for the
    smallest k giving a name not used in the body.
    """
    if isinstance(f, Atom):
        if not any(isinstance(a, Var) and a.name == x for a in f.args):
            return f
        return Atom(
            f.predicate,
            tuple(t if isinstance(a, Var) and a.name == x else a for a in f.args),
        )
    if isinstance(f, Not):
        return Not(substitute(f.body, x, t))
    if isinstance(f, (And, Or)):
        return type(f)(substitute(f.left, x, t), substitute(f.right, x, t))
    # quantifier
    if f.var == x or x not in free_variables(f.body):
        return f
    body, var = f.body, f.var
    if isinstance(t, Var) and t.name == var:
        new = _fresh(var, all_variables(body) | {x, t.name})
        body, var = substitute(body, var, Var(new)), new
    return type(f)(var, substitute(body, x, t))


def rename_bound(f: Formula, old: str, new: str) -> Formula:
    """Alpha-rename the outermost binder of `f` from `old` to `new`."""
    if not isinstance(f, Quantified) or f.var != old:
        raise ValueError(f"{f} does not bind {old}")
    return type(f)(new, substitute(f.body, old, Var(new)))


def alpha_equivalent(f: Formula, g: Formula) -> bool:
    return f == g


def syntactically_equal(f: Formula, g: Formula) -> bool:
    """Strict structural identity, binder names included."""

    def key(h):
        if isinstance(h, Atom):
            return ("atom", h.predicate, h.args)
        if isinstance(h, Not):
            return ("not", key(h.body))
        if isinstance(h, (And, Or)):
            return (type(h).__name__, key(h.left), key(h.right))
        return (type(h).__name__, h.var, key(h.body))

    return key(f) == key(g)


def enumerate_formulas(
    sig: Signature, max_depth: int, max_atoms: int
) -> Iterator[Formula]:
    """Yield every quantifier-free formula over the ground atoms of `sig`.

    Formulas have connective depth at most `max_depth` and mention at most
    `max_atoms` distinct atoms. The order is deterministic: atoms first, then
    negations, conjunctions and disjunctions built from the previous layer.
    Each formula appears exactly once.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be non-negative")
    base = [a for a in sig.ground_atoms()]
    limit = max(max_atoms, 0)

    def ok(g):
        return len(set(atoms(g))) <= limit

    layer = [a for a in base if limit >= 1]
    for _ in range(max_depth):
        nxt = list(layer[: len(base)]) if limit >= 1 else []
        prev = layer
        nxt.extend(Not(a) for a in prev)
        nxt.extend(g for a, b in itertools.product(prev, prev) if ok(g := And(a, b)))
        nxt.extend(g for a, b in itertools.product(prev, prev) if ok(g := Or(a, b)))
        layer = nxt
    yield from layer


def count_formulas(num_atoms: int, max_depth: int) -> int:
    """Size of `enumerate_formulas` output when no atom filter bites."""
    c = num_atoms
    for _ in range(max_depth):
        c = num_atoms + c + 2 * c * c
    return c


def propositional_letters(k: int) -> list[str]:
    letters = "pqrst"
    if k <= len(letters):
        return list(letters[:k])
    return [f"p{i}" for i in range(k)]


def prop_signature(names: Iterable[str]) -> Signature:
    return Signature({n: 0 for n in names})
