"""Finite first-order structures shared by both value spaces.

A structure has a domain ``{0, ..., size-1}``, a map from constants to
elements and, for each predicate, a total table from element tuples to
values. The value type is left to the subclasses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .formula import Signature


class EvaluationError(LookupError):
    """A formula mentions a symbol or variable the interpretation lacks."""


def _key_to_text(args: tuple[int, ...]) -> str:
    return "(" + ",".join(str(a) for a in args) + ")"


def _text_to_key(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


@dataclass(frozen=True)
class Structure:
    domain_size: int
    constants: Mapping[str, int]
    predicates: Mapping[str, Mapping[tuple[int, ...], Any]]

    def __post_init__(self):
        if self.domain_size < 1:
            raise ValueError("domain must be non-empty")
        consts = dict(sorted(self.constants.items()))
        for c, d in consts.items():
            if not 0 <= d < self.domain_size:
                raise ValueError(f"constant {c} denotes {d}, outside the domain")
        preds = {}
        for name in sorted(self.predicates):
            table = {tuple(k): v for k, v in self.predicates[name].items()}
            arities = {len(k) for k in table}
            if len(arities) != 1:
                raise ValueError(f"predicate {name} has an empty or mixed-arity table")
            (arity,) = arities
            expected = set(itertools.product(range(self.domain_size), repeat=arity))
            if set(table) != expected:
                raise ValueError(f"table of {name} is not total on the domain")
            for v in table.values():
                self._check_value(v)
            preds[name] = dict(sorted(table.items()))
        object.__setattr__(self, "constants", consts)
        object.__setattr__(self, "predicates", preds)

    def _check_value(self, v) -> None:
        pass

    @property
    def domain(self) -> range:
        return range(self.domain_size)

    def arity(self, predicate: str) -> int:
        return len(next(iter(self.predicates[predicate])))

    def signature(self) -> Signature:
        return Signature(
            {p: self.arity(p) for p in self.predicates}, frozenset(self.constants)
        )

    def lookup(self, predicate: str, args: tuple[int, ...]):
        try:
            table = self.predicates[predicate]
        except KeyError:
            raise EvaluationError(f"uninterpreted predicate {predicate}") from None
        try:
            return table[args]
        except KeyError:
            raise EvaluationError(
                f"predicate {predicate} applied to {len(args)} arguments"
            ) from None

    def denotation(self, constant: str) -> int:
        try:
            return self.constants[constant]
        except KeyError:
            raise EvaluationError(f"uninterpreted constant {constant}") from None

    def map_values(self, fn: Callable, cls=None, **extra):
        cls = cls or type(self)
        preds = {
            p: {k: fn(v) for k, v in table.items()} for p, table in self.predicates.items()
        }
        return cls(self.domain_size, dict(self.constants), preds, **extra)

    def to_json(self) -> dict:
        return {
            "domain_size": self.domain_size,
            "constants": dict(self.constants),
            "predicates": {
                p: {_key_to_text(k): str(v) for k, v in table.items()}
                for p, table in self.predicates.items()
            },
        }

    @staticmethod
    def _parts_from_json(data: Mapping, parse_value: Callable):
        preds = {
            p: {_text_to_key(k): parse_value(v) for k, v in table.items()}
            for p, table in data.get("predicates", {}).items()
        }
        return int(data["domain_size"]), dict(data.get("constants", {})), preds
