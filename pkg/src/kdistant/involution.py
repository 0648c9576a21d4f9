"""The trace involution exchanging k-distant crossings and nestings."""
from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass, field

from kdistant.partition import Edge, SetPartition, make_partition


class TraceConsistencyError(RuntimeError):
    """The incremental construction reached a state it should never reach.

    ``trace`` holds the rows built so far (same layout as ``phi_trace``).
    """

    def __init__(self, message: str, trace: list[dict]):
        super().__init__(message)
        self.trace = trace


@dataclass
class Trace:
    """A partial diagram on vertices ``1..position``.

    ``vacant`` is kept sorted, so rank-from-either-end is a bisect away.
    """
    position: int = 0
    closed_edges: list[Edge] = field(default_factory=list)
    vacant: list[int] = field(default_factory=list)

    def open_half_edge(self, v: int) -> None:
        insort(self.vacant, v)

    def close(self, v: int, i: int) -> None:
        self.vacant.remove(v)
        self.closed_edges.append(Edge(v, i))

    def far_vacancies(self, i: int, k: int) -> list[int]:
        """Vacant vertices ``v`` with ``i - v >= k``, ascending."""
        return self.vacant[:bisect_right(self.vacant, i - k)]

    def snapshot(self) -> dict:
        return {"edges": [list(e) for e in sorted(self.closed_edges)],
                "vacant": list(self.vacant)}


def _run(pi: SetPartition, k: int, record: bool):
    if k < 0:
        raise ValueError("k must be nonnegative")
    cls = pi.classification
    left = pi.left_partner
    source = Trace()   # T_i'(pi): the diagram of pi itself
    image = Trace()    # T_i^(k)
    gammas: dict[int, int] = {}
    rows: list[dict] = []

    def fail(msg):
        raise TraceConsistencyError(msg, rows + [{"i": i, "T_pi": source.snapshot(),
                                                  "T_k": image.snapshot()}])

    for i in range(1, pi.n + 1):
        source.position = image.position = i
        if i not in cls.closers:
            source.open_half_edge(i)
            image.open_half_edge(i)
        if i not in cls.openers:
            j = left[i]
            if i - j < k:
                if j not in image.vacant:
                    fail(f"vertex {j} is not vacant in the image trace at step {i}")
                image.close(j, i)
            else:
                far_source = source.far_vacancies(i, k)
                far_image = image.far_vacancies(i, k)
                if j not in far_source:
                    fail(f"partner {j} of {i} is missing from V at step {i}")
                r = len(far_source) - far_source.index(j)
                if r > len(far_image):
                    fail(f"U has {len(far_image)} elements but rank {r} is needed at step {i}")
                gammas[i] = r
                image.close(far_image[r - 1], i)
            source.close(j, i)
        if record:
            rows.append({"i": i, "gamma": gammas.get(i),
                         "T_pi": source.snapshot(), "T_k": image.snapshot()})
    if image.vacant:
        fail(f"vacant vertices {image.vacant} left at the end")
    return image.closed_edges, gammas, rows


def _from_edges(n: int, arcs: list[Edge]) -> SetPartition:
    nxt = {}
    has_left = set()
    for a, b in arcs:
        if a != b:
            nxt[a] = b
            has_left.add(b)
    blocks = []
    for v in range(1, n + 1):
        if v in has_left:
            continue
        block = [v]
        while block[-1] in nxt:
            block.append(nxt[block[-1]])
        blocks.append(block)
    return make_partition(blocks, n)


def phi(pi: SetPartition, k: int) -> SetPartition:
    """Apply the involution; swaps k-distant crossing and nesting counts."""
    arcs, _, _ = _run(pi, k, record=False)
    return _from_edges(pi.n, arcs)


def phi_trace(pi: SetPartition, k: int) -> tuple[SetPartition, list[dict]]:
    """Like :func:`phi`, also returning one row per vertex.

    Each row has keys ``i``, ``gamma`` (None where undefined), ``T_pi`` and
    ``T_k``; the last two are ``{"edges": [...], "vacant": [...]}``.
    """
    arcs, _, rows = _run(pi, k, record=True)
    return _from_edges(pi.n, arcs), rows


def gammas(pi: SetPartition, k: int) -> dict[int, int]:
    """All defined gamma values, keyed by vertex."""
    return _run(pi, k, record=False)[1]


def gamma(pi: SetPartition, i: int, k: int) -> int:
    """Rank of the left partner of ``i`` among the far vacancies, from the largest."""
    cls = pi.classification
    if not 1 <= i <= pi.n or i in cls.openers:
        raise ValueError(f"gamma is defined only at closers, singletons and transients; got {i}")
    j = pi.left_partner[i]
    if i - j < k:
        raise ValueError(f"gamma_{i} undefined for k={k}: partner {j} is closer than k")
    return gammas(pi, k)[i]
