"""The n-tuple value algebra and its valuation of formulas.

Values are bit vectors of a fixed width n, ordered lexicographically with
the leftmost bit most significant. Conjunction and disjunction are the
lexicographic minimum and maximum; negation flips every bit. For n = 2 the
order is 00 < 01 < 10 < 11.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Optional

from .formula import And, Atom, Const, Exists, Forall, Formula, Not, Or, Var
from .structure import EvaluationError, Structure


class WidthError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TupleValue:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise WidthError("tuple values need width >= 1")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"components must be 0 or 1, got {self.bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "TupleValue":
        """Read a bit string such as ``"10"`` (brackets and commas tolerated)."""
        cleaned = text.strip().strip("<>⟨⟩()[]").replace(",", "").replace(" ", "")
        if not cleaned or set(cleaned) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in cleaned))

    @classmethod
    def from_code(cls, code: int, width: int) -> "TupleValue":
        if not 0 <= code < 2**width:
            raise ValueError(f"code {code} out of range for width {width}")
        return cls(tuple((code >> (width - 1 - i)) & 1 for i in range(width)))

    @classmethod
    def top(cls, width: int) -> "TupleValue":
        return cls((1,) * width)

    @classmethod
    def bottom(cls, width: int) -> "TupleValue":
        return cls((0,) * width)

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def code(self) -> int:
        """Integer whose natural order is the lexicographic order."""
        return int("".join(map(str, self.bits)), 2)

    def __str__(self):
        return "".join(map(str, self.bits))

    def __repr__(self):
        return f"TupleValue('{self}')"

    def pretty(self) -> str:
        return "⟨" + ",".join(map(str, self.bits)) + "⟩"


def all_values(width: int) -> list[TupleValue]:
    """Every value of the given width, ascending."""
    return [TupleValue(bits) for bits in itertools.product((0, 1), repeat=width)]


def _same_width(a: TupleValue, b: TupleValue) -> None:
    if a.width != b.width:
        raise WidthError(f"width mismatch: {a} vs {b}")


def tuple_neg(a: TupleValue) -> TupleValue:
    return TupleValue(tuple(1 - x for x in a.bits))


def tuple_meet(a: TupleValue, b: TupleValue) -> TupleValue:
    _same_width(a, b)
    return min(a, b)


def tuple_join(a: TupleValue, b: TupleValue) -> TupleValue:
    _same_width(a, b)
    return max(a, b)


class DesignatedMode(enum.Enum):
    STRICT = "strict"
    BOSSY = "bossy"
    TOLERANT = "tolerant"


def is_designated(a: TupleValue, mode: DesignatedMode | str) -> bool:
    """strict: all ones; bossy: first bit set; tolerant: anything but all zeros."""
    mode = DesignatedMode(mode)
    if mode is DesignatedMode.STRICT:
        return all(a.bits)
    if mode is DesignatedMode.BOSSY:
        return a.bits[0] == 1
    return any(a.bits)


def eval_prop(f: Formula, v: Mapping[str, TupleValue]) -> TupleValue:
    """Value of a propositional formula under an assignment to its letters."""
    if isinstance(f, Atom):
        if f.args:
            raise ValueError(f"{f} is not propositional")
        try:
            return v[f.predicate]
        except KeyError:
            raise EvaluationError(f"no value for atom {f.predicate}") from None
    if isinstance(f, Not):
        return tuple_neg(eval_prop(f.body, v))
    if isinstance(f, And):
        return tuple_meet(eval_prop(f.left, v), eval_prop(f.right, v))
    if isinstance(f, Or):
        return tuple_join(eval_prop(f.left, v), eval_prop(f.right, v))
    raise ValueError(f"{f} is not propositional")


@dataclass(frozen=True)
class ClemensInterpretation(Structure):
    """Finite structure whose predicate tables take n-tuple values."""

    width: int = 2

    def __post_init__(self):
        if self.width < 1:
            raise WidthError("width must be at least 1")
        super().__post_init__()

    def _check_value(self, v):
        if not isinstance(v, TupleValue) or v.width != self.width:
            raise WidthError(f"table value {v!r} is not a width-{self.width} tuple")

    def to_json(self) -> dict:
        out = super().to_json()
        out["semantics"] = "tuple"
        out["n"] = self.width
        return out

    @classmethod
    def from_json(cls, data: Mapping, width: Optional[int] = None):
        size, consts, preds = cls._parts_from_json(data, TupleValue.parse)
        width = width or data.get("n")
        if width is None:
            sample = [v for t in preds.values() for v in t.values()]
            width = sample[0].width if sample else 2
        return cls(size, consts, preds, width=int(width))

    @classmethod
    def propositional(cls, v: Mapping[str, TupleValue | str], width: Optional[int] = None):
        """One-element structure realising a propositional assignment."""
        vals = {p: x if isinstance(x, TupleValue) else TupleValue.parse(x) for p, x in v.items()}
        if width is None:
            width = next(iter(vals.values())).width if vals else 2
        return cls(1, {}, {p: {(): x} for p, x in vals.items()}, width=width)


def _element(t, m: Structure, env: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvaluationError(f"unbound variable {t.name}") from None
    assert isinstance(t, Const)
    return m.denotation(t.name)


def eval_sentence(
    f: Formula, m: ClemensInterpretation, env: Optional[Mapping[str, int]] = None
) -> TupleValue:
    """Value of `f` in `m`, reading free variables from `env`.

    Quantifiers range over the whole domain: a universal takes the
    lexicographic minimum over all instances, an existential the maximum.
    """
    env = dict(env or {})
    if isinstance(f, Atom):
        return m.lookup(f.predicate, tuple(_element(t, m, env) for t in f.args))
    if isinstance(f, Not):
        return tuple_neg(eval_sentence(f.body, m, env))
    if isinstance(f, And):
        return tuple_meet(eval_sentence(f.left, m, env), eval_sentence(f.right, m, env))
    if isinstance(f, Or):
        return tuple_join(eval_sentence(f.left, m, env), eval_sentence(f.right, m, env))
    instances = (eval_sentence(f.body, m, {**env, f.var: d}) for d in m.domain)
    op = tuple_meet if isinstance(f, Forall) else tuple_join
    assert isinstance(f, (Forall, Exists))
    return reduce(op, instances)
