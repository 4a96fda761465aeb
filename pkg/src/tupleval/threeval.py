"""Strong Kleene three-valued semantics over {0, 1/2, 1}.

The same evaluator serves K3, LP, the mixed st relation and, restricted to
two-valued interpretations, classical logic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce, total_ordering
from typing import Mapping, Optional

from .formula import And, Atom, Const, Exists, Forall, Formula, Not, Or, Var
from .structure import EvaluationError, Structure


@total_ordering
class ThreeValue(enum.Enum):
    FALSE = Fraction(0)
    HALF = Fraction(1, 2)
    TRUE = Fraction(1)

    def __lt__(self, other):
        if not isinstance(other, ThreeValue):
            return NotImplemented
        return self.value < other.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ThreeValue('{self}')"

    @property
    def letter(self) -> str:
        """The t / i / f name of the value."""
        return {ThreeValue.TRUE: "t", ThreeValue.HALF: "i", ThreeValue.FALSE: "f"}[self]

    @classmethod
    def parse(cls, text) -> "ThreeValue":
        if isinstance(text, ThreeValue):
            return text
        key = str(text).strip().lower()
        aliases = {"t": "1", "i": "1/2", "f": "0", "0.5": "1/2", ".5": "1/2"}
        key = aliases.get(key, key)
        try:
            return cls(Fraction(key))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a three-valued truth value: {text!r}") from None

    @property
    def code(self) -> int:
        return int(self.value * 2)

    @classmethod
    def from_code(cls, code: int) -> "ThreeValue":
        return cls(Fraction(code, 2))


ZERO, HALF, ONE = ThreeValue.FALSE, ThreeValue.HALF, ThreeValue.TRUE
THREE_VALUES = (ZERO, HALF, ONE)
TWO_VALUES = (ZERO, ONE)


def neg3(a: ThreeValue) -> ThreeValue:
    return ThreeValue(1 - a.value)


def meet3(a: ThreeValue, b: ThreeValue) -> ThreeValue:
    return min(a, b)


def join3(a: ThreeValue, b: ThreeValue) -> ThreeValue:
    return max(a, b)


class ThreeDesignatedMode(enum.Enum):
    K3 = "k3"
    LP = "lp"
    CLASSICAL = "classical"


def is_designated3(a: ThreeValue, mode: ThreeDesignatedMode | str) -> bool:
    mode = ThreeDesignatedMode(mode)
    if mode is ThreeDesignatedMode.LP:
        return a >= HALF
    if mode is ThreeDesignatedMode.CLASSICAL and a is HALF:
        raise ValueError("classical designation is undefined for 1/2")
    return a is ONE


def eval3_prop(f: Formula, v: Mapping[str, ThreeValue]) -> ThreeValue:
    if isinstance(f, Atom):
        if f.args:
            raise ValueError(f"{f} is not propositional")
        try:
            return v[f.predicate]
        except KeyError:
            raise EvaluationError(f"no value for atom {f.predicate}") from None
    if isinstance(f, Not):
        return neg3(eval3_prop(f.body, v))
    if isinstance(f, And):
        return meet3(eval3_prop(f.left, v), eval3_prop(f.right, v))
    if isinstance(f, Or):
        return join3(eval3_prop(f.left, v), eval3_prop(f.right, v))
    raise ValueError(f"{f} is not propositional")


@dataclass(frozen=True)
class ThreeValuedInterpretation(Structure):
    """Finite structure with {0, 1/2, 1}-valued predicate tables.

    With ``classical=True`` the tables may only hold 0 and 1.
    """

    classical: bool = False

    def _check_value(self, v):
        if not isinstance(v, ThreeValue):
            raise TypeError(f"table value {v!r} is not a ThreeValue")
        if self.classical and v is HALF:
            raise ValueError("classical interpretations cannot use 1/2")

    @property
    def is_two_valued(self) -> bool:
        return all(v is not HALF for t in self.predicates.values() for v in t.values())

    def to_json(self) -> dict:
        out = super().to_json()
        out["semantics"] = "classical" if self.classical else "three"
        return out

    @classmethod
    def from_json(cls, data: Mapping, classical: Optional[bool] = None):
        size, consts, preds = cls._parts_from_json(data, ThreeValue.parse)
        if classical is None:
            classical = data.get("semantics") == "classical"
        return cls(size, consts, preds, classical=classical)

    @classmethod
    def propositional(cls, v: Mapping[str, ThreeValue | str], classical: bool = False):
        vals = {p: ThreeValue.parse(x) for p, x in v.items()}
        return cls(1, {}, {p: {(): x} for p, x in vals.items()}, classical=classical)


def _element(t, m: Structure, env: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        if t.name not in env:
            raise EvaluationError(f"unbound variable {t.name}")
        return env[t.name]
    assert isinstance(t, Const)
    return m.denotation(t.name)


def eval3_sentence(
    f: Formula, m: ThreeValuedInterpretation, env: Optional[Mapping[str, int]] = None
) -> ThreeValue:
    env = dict(env or {})
    if isinstance(f, Atom):
        return m.lookup(f.predicate, tuple(_element(t, m, env) for t in f.args))
    if isinstance(f, Not):
        return neg3(eval3_sentence(f.body, m, env))
    if isinstance(f, And):
        return meet3(eval3_sentence(f.left, m, env), eval3_sentence(f.right, m, env))
    if isinstance(f, Or):
        return join3(eval3_sentence(f.left, m, env), eval3_sentence(f.right, m, env))
    assert isinstance(f, (Forall, Exists))
    op = meet3 if isinstance(f, Forall) else join3
    return reduce(op, (eval3_sentence(f.body, m, {**env, f.var: d}) for d in m.domain))
