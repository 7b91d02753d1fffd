"""Valued quivers, valued graphs, and reduced walks.

Vertices are labelled ``1..n``.  An arrow carries a pair of positive
integers, its valuation; ``(1, 1)`` is the trivial valuation.  Valued
quivers here never have loops, 2-cycles, or parallel arrows, which is
enforced at construction time.

Walks traverse arrows forwards or backwards.  In a tree there is exactly
one reduced walk between any two vertices; several constructions in this
package reduce to counting the forward and backward steps of that walk.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BadValuationError,
    DanglingVertexError,
    InvalidQuiverError,
    LoopArrowError,
    MultipleArrowError,
    NotATreeError,
    TwoCycleError,
)

Valuation = tuple[int, int]

TRIVIAL: Valuation = (1, 1)


def swap(val: Valuation) -> Valuation:
    return (val[1], val[0])


class Arrow(NamedTuple):
    src: int
    dst: int
    val: Valuation = TRIVIAL


class Step(NamedTuple):
    """A single walk step: an arrow traversed forwards or backwards."""

    arrow: Arrow
    forward: bool

    @property
    def start(self) -> int:
        return self.arrow.src if self.forward else self.arrow.dst

    @property
    def end(self) -> int:
        return self.arrow.dst if self.forward else self.arrow.src

    def inverse(self) -> "Step":
        return Step(self.arrow, not self.forward)


@dataclass(frozen=True)
class Walk:
    """A walk in a quiver; empty ``steps`` means the trivial walk."""

    start: int
    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        at = self.start
        for step in self.steps:
            if step.start != at:
                raise InvalidQuiverError(f"walk steps do not compose at {at}")
            at = step.end

    @property
    def end(self) -> int:
        return self.steps[-1].end if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def forward_count(self) -> int:
        return sum(1 for s in self.steps if s.forward)

    @property
    def inverse_count(self) -> int:
        return sum(1 for s in self.steps if not s.forward)

    def is_reduced(self) -> bool:
        return all(
            b != a.inverse() for a, b in zip(self.steps, self.steps[1:])
        )


class Edge(NamedTuple):
    """Graph edge with valuation read from ``x``; stored with ``x < y``."""

    x: int
    y: int
    val: Valuation = TRIVIAL


def _check_vertex(v: object, n: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
        raise DanglingVertexError(f"vertex {v!r} is not in 1..{n}")
    return v


def _check_valuation(val: object) -> Valuation:
    if (
        not isinstance(val, tuple)
        or len(val) != 2
        or any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in val)
    ):
        raise BadValuationError(f"valuation {val!r} is not a pair of positive integers")
    return val


@dataclass(frozen=True)
class ValuedQuiver:
    """A finite valued quiver without loops, 2-cycles, or parallel arrows."""

    n: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidQuiverError(f"vertex count {self.n!r} must be a positive integer")
        seen: dict[tuple[int, int], Arrow] = {}
        for a in self.arrows:
            _check_vertex(a.src, self.n)
            _check_vertex(a.dst, self.n)
            _check_valuation(a.val)
            if a.src == a.dst:
                raise LoopArrowError(f"loop at vertex {a.src}")
            if (a.src, a.dst) in seen:
                raise MultipleArrowError(f"parallel arrows {a.src}->{a.dst}")
            if (a.dst, a.src) in seen:
                raise TwoCycleError(f"2-cycle between {a.src} and {a.dst}")
            seen[(a.src, a.dst)] = a

    def opposite(self) -> "ValuedQuiver":
        """Reverse every arrow and swap its valuation pair."""
        return ValuedQuiver(
            self.n, tuple(Arrow(a.dst, a.src, swap(a.val)) for a in self.arrows)
        )

    def underlying_graph(self) -> "ValuedGraph":
        return ValuedGraph(
            self.n, tuple(Edge(a.src, a.dst, a.val) for a in self.arrows)
        )

    def out_arrows(self, x: int) -> tuple[Arrow, ...]:
        return _adjacency(self)[0][x]

    def in_arrows(self, x: int) -> tuple[Arrow, ...]:
        return _adjacency(self)[1][x]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def is_tree(self) -> bool:
        try:
            _walk_table(self)
        except NotATreeError:
            return False
        return True


@dataclass(frozen=True)
class ValuedGraph:
    """A finite valued graph without loops or multiple edges.

    Edges are normalised to ``x < y`` with the valuation re-read from the
    smaller endpoint, so the two ways of writing an edge compare equal.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidQuiverError(f"vertex count {self.n!r} must be a positive integer")
        normalised = []
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            _check_vertex(e.x, self.n)
            _check_vertex(e.y, self.n)
            _check_valuation(e.val)
            if e.x == e.y:
                raise LoopArrowError(f"loop at vertex {e.x}")
            if e.x > e.y:
                e = Edge(e.y, e.x, swap(e.val))
            if (e.x, e.y) in seen:
                raise MultipleArrowError(f"multiple edges between {e.x} and {e.y}")
            seen.add((e.x, e.y))
            normalised.append(e)
        object.__setattr__(self, "edges", tuple(sorted(normalised)))

    def valuation(self, x: int, y: int) -> int:
        """The component ``v_xy``, or 0 when there is no edge."""
        return _valuation_table(self).get((x, y), 0)

    def has_edge(self, x: int, y: int) -> bool:
        return (x, y) in _valuation_table(self)

    def neighbors(self, x: int) -> tuple[int, ...]:
        return _graph_adjacency(self)[x]

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    def weight(self, x: int) -> int:
        return sum(self.valuation(x, y) for y in self.neighbors(x))

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def is_simply_laced(self) -> bool:
        return all(e.val == TRIVIAL for e in self.edges)

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {1}
        queue = deque([1])
        while queue:
            x = queue.popleft()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n - 1


def validate(n: int, arrows: Iterable[Sequence]) -> ValuedQuiver:
    """Build a :class:`ValuedQuiver` from raw ``(src, dst[, (a, b)])`` data."""
    normalised = []
    for raw in arrows:
        parts = tuple(raw)
        if len(parts) == 2:
            normalised.append(Arrow(parts[0], parts[1]))
        elif len(parts) == 3:
            val = parts[2]
            normalised.append(Arrow(parts[0], parts[1], tuple(val)))
        else:
            raise InvalidQuiverError(f"arrow {raw!r} is not (src, dst[, valuation])")
    return ValuedQuiver(n, tuple(normalised))


# -- cached per-quiver tables --------------------------------------------------

@lru_cache(maxsize=None)
def _adjacency(
    q: ValuedQuiver,
) -> tuple[dict[int, tuple[Arrow, ...]], dict[int, tuple[Arrow, ...]]]:
    out: dict[int, list[Arrow]] = {x: [] for x in q.vertices()}
    inn: dict[int, list[Arrow]] = {x: [] for x in q.vertices()}
    for a in q.arrows:
        out[a.src].append(a)
        inn[a.dst].append(a)
    return (
        {x: tuple(v) for x, v in out.items()},
        {x: tuple(v) for x, v in inn.items()},
    )


@lru_cache(maxsize=None)
def _valuation_table(g: ValuedGraph) -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for e in g.edges:
        table[(e.x, e.y)] = e.val[0]
        table[(e.y, e.x)] = e.val[1]
    return table


@lru_cache(maxsize=None)
def _graph_adjacency(g: ValuedGraph) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {x: [] for x in g.vertices()}
    for e in g.edges:
        adj[e.x].append(e.y)
        adj[e.y].append(e.x)
    return {x: tuple(sorted(v)) for x, v in adj.items()}


@lru_cache(maxsize=None)
def _walk_table(q: ValuedQuiver) -> dict[tuple[int, int], Walk]:
    """All-pairs reduced walks of a tree quiver, via BFS from every vertex."""
    if len(q.arrows) != q.n - 1:
        raise NotATreeError(f"{len(q.arrows)} arrows on {q.n} vertices")
    steps: dict[int, list[Step]] = {x: [] for x in q.vertices()}
    for a in q.arrows:
        steps[a.src].append(Step(a, True))
        steps[a.dst].append(Step(a, False))
    table: dict[tuple[int, int], Walk] = {}
    for x in q.vertices():
        parent: dict[int, Step] = {}
        seen = {x}
        queue = deque([x])
        while queue:
            u = queue.popleft()
            for step in steps[u]:
                v = step.end
                if v not in seen:
                    seen.add(v)
                    parent[v] = step
                    queue.append(v)
        if len(seen) != q.n:
            raise NotATreeError("underlying graph is disconnected")
        for y in q.vertices():
            backwards = []
            at = y
            while at != x:
                backwards.append(parent[at])
                at = parent[at].start
            table[(x, y)] = Walk(x, tuple(reversed(backwards)))
    return table


def reduced_walk(q: ValuedQuiver, x: int, y: int) -> Walk:
    """The unique reduced walk between two vertices of a tree quiver."""
    _check_vertex(x, q.n)
    _check_vertex(y, q.n)
    return _walk_table(q)[(x, y)]


def arrow_counts(q: ValuedQuiver, x: int, y: int) -> tuple[int, int]:
    """Forward and backward step counts of the reduced walk ``x .. y``."""
    w = reduced_walk(q, x, y)
    return (w.forward_count, w.inverse_count)
