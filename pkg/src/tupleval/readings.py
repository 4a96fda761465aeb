"""Plain-language renderings of tuple values.

Three schemes are built in: the original four glosses for pairs, an agent
reading (position i is the verdict of agent i, most trusted first) and a
respects reading (position i says whether a predicate applies in the i-th
respect). A ``custom`` scheme just pairs each bit with a user label.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tuples import TupleValue

CLEMENS_GLOSSES = {
    "11": "true, and true only",
    "10": "true, but also false",
    "01": "false, but also true",
    "00": "false, and false only",
}

KINDS = ("clemens", "agents", "respects", "custom")


@dataclass(frozen=True)
class ReadingScheme:
    kind: str
    labels: tuple[str, ...] = ()
    predicate: str = "P"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown reading scheme {self.kind!r}")
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def default(cls, kind: str, width: int, labels: Optional[Sequence[str]] = None,
                predicate: str = "P") -> "ReadingScheme":
        """Scheme of the given kind with generated labels where none are given."""
        if labels:
            return cls(kind, tuple(labels), predicate)
        if kind == "agents":
            gen = tuple(f"agent {i + 1}" for i in range(width))
        elif kind == "clemens":
            gen = ("first", "second")
        else:
            gen = tuple(f"respect {i + 1}" for i in range(width))
        return cls(kind, gen, predicate)

    def check_width(self, width: int) -> None:
        if self.kind == "clemens" and width != 2:
            raise ValueError("the Clemens reading is defined for pairs only")
        if len(self.labels) != width:
            raise ValueError(f"{len(self.labels)} labels for a width-{width} value")


def _respects(bits, labels, predicate) -> str:
    first = bits[0]
    parts = [f"{'' if first else 'not '}{predicate} according to {labels[0]}"]
    for b, label in zip(bits[1:], labels[1:]):
        if b == first:
            parts.append(f"and according to {label}" if b else f"and also not according to {label}")
        elif first:
            parts.append(f"but not according to {label}")
        else:
            parts.append(f"but {predicate} according to {label}")
    return ", ".join(parts)


def _agents(bits, labels) -> str:
    judged = ", ".join(f"{lab} judges {'true' if b else 'false'}" for b, lab in zip(bits, labels))
    if all(bits):
        tail = "unanimously true"
    elif not any(bits):
        tail = "unanimously false"
    else:
        tail = "split"
    return f"{judged} ({tail})"


def explain(value: TupleValue | str, scheme: ReadingScheme) -> str:
    """Render `value` under `scheme`.

    >>> explain("10", ReadingScheme("clemens", ("first", "second")))
    'true, but also false'
    """
    if not isinstance(value, TupleValue):
        value = TupleValue.parse(value)
    scheme.check_width(value.width)
    bits = value.bits
    if scheme.kind == "clemens":
        return CLEMENS_GLOSSES[str(value)]
    if scheme.kind == "agents":
        return _agents(bits, scheme.labels)
    if scheme.kind == "respects":
        return _respects(bits, scheme.labels, scheme.predicate)
    return ", ".join(f"{lab}: {'true' if b else 'false'}" for b, lab in zip(bits, scheme.labels))
