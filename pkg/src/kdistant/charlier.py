"""Charlier diagrams: labelled Motzkin paths in bijection with set partitions."""
from __future__ import annotations

import json
import re
from bisect import insort
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from kdistant.involution import gammas
from kdistant.partition import SetPartition, make_partition


class InvalidDiagramError(ValueError):
    def __init__(self, message: str, index: int):
        super().__init__(f"step {index}: {message}")
        self.index = index


class Step(NamedTuple):
    t: str       # "U", "D" or "H"
    e: int = 0   # label; always 0 for U

    def __str__(self):
        return "U" if self.t == "U" else f"{self.t}{self.e}"


_DELTA = {"U": 1, "D": -1, "H": 0}


@dataclass(frozen=True)
class CharlierDiagram:
    steps: tuple[Step, ...]

    def __post_init__(self):
        validate(self.steps)

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return " ".join(map(str, self.steps))

    def heights(self) -> list[int]:
        """Heights h_0..h_n of the path's points."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + _DELTA[s.t])
        return h


def validate(steps: Sequence[Step]) -> None:
    """Raise InvalidDiagramError at the first step breaking the diagram rules."""
    h = 0
    for idx, s in enumerate(steps, start=1):
        if s.t not in _DELTA:
            raise InvalidDiagramError(f"unknown step type {s.t!r}", idx)
        if s.t == "U" and s.e != 0:
            raise InvalidDiagramError("up steps carry no label", idx)
        if s.t == "D" and not 1 <= s.e <= h:
            raise InvalidDiagramError(f"label {s.e} outside [1,{h}] for a down step at height {h}", idx)
        if s.t == "H" and not 0 <= s.e <= h:
            raise InvalidDiagramError(f"label {s.e} outside [0,{h}] for a level step at height {h}", idx)
        h += _DELTA[s.t]
    if h != 0:
        raise InvalidDiagramError(f"path ends at height {h}", len(steps))


def to_charlier(pi: SetPartition) -> CharlierDiagram:
    cls = pi.classification
    ranks = gammas(pi, 1)
    steps = []
    for i in range(1, pi.n + 1):
        if i in cls.openers:
            steps.append(Step("U"))
        elif i in cls.closers:
            steps.append(Step("D", ranks[i]))
        elif i in cls.singletons:
            steps.append(Step("H", 0))
        else:
            steps.append(Step("H", ranks[i]))
    return CharlierDiagram(tuple(steps))


def from_charlier(d: CharlierDiagram | Sequence[Step]) -> SetPartition:
    """Inverse of :func:`to_charlier`.

    ``H0`` always decodes as a singleton: a transient's label is a rank, never 0.
    """
    steps = d.steps if isinstance(d, CharlierDiagram) else tuple(d)
    validate(steps)
    vacant: list[int] = []
    block_of: dict[int, list[int]] = {}
    blocks = []
    for i, s in enumerate(steps, start=1):
        if s.t == "U" or (s.t == "H" and s.e == 0):
            block = [i]
            blocks.append(block)
        else:
            j = vacant.pop(len(vacant) - s.e)
            block = block_of.pop(j)
            block.append(i)
        if s.t == "U" or (s.t == "H" and s.e > 0):
            insort(vacant, i)
            block_of[i] = block
    return make_partition(blocks, len(steps))


def diagram_crossing_witness(d: CharlierDiagram) -> int | None:
    """Largest label >= 2 on a D or H step, if any."""
    labels = [s.e for s in d.steps if s.t != "U" and s.e >= 2]
    return max(labels) if labels else None


def all_diagrams(n: int) -> Iterator[CharlierDiagram]:
    """Every valid Charlier diagram of length n."""
    def rec(prefix: list[Step], h: int):
        left = n - len(prefix)
        if left == 0:
            if h == 0:
                yield CharlierDiagram(tuple(prefix))
            return
        if h + 1 <= left - 1:
            prefix.append(Step("U"))
            yield from rec(prefix, h + 1)
            prefix.pop()
        if h <= left - 1:
            for e in range(h + 1):
                prefix.append(Step("H", e))
                yield from rec(prefix, h)
                prefix.pop()
        if h >= 1:
            for e in range(1, h + 1):
                prefix.append(Step("D", e))
                yield from rec(prefix, h - 1)
                prefix.pop()

    yield from rec([], 0)


_STEP_TOKEN = re.compile(r"^(U)$|^([DH])(\d+)$")


def parse_diagram(text: str) -> CharlierDiagram:
    steps = []
    for idx, tok in enumerate(text.split(), start=1):
        m = _STEP_TOKEN.match(tok)
        if m is None:
            raise InvalidDiagramError(f"bad token {tok!r}", idx)
        steps.append(Step("U") if m.group(1) else Step(m.group(2), int(m.group(3))))
    return CharlierDiagram(tuple(steps))


def to_json(d: CharlierDiagram) -> str:
    return json.dumps({"steps": [{"t": "U"} if s.t == "U" else {"t": s.t, "e": s.e}
                                 for s in d.steps]}, separators=(",", ":"))


def from_json(text: str) -> CharlierDiagram:
    obj = json.loads(text)
    return CharlierDiagram(tuple(Step(s["t"], s.get("e", 0)) for s in obj["steps"]))
