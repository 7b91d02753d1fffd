"""Hammocks: where a given simple composition factor lives.

For a vertex ``k`` of the ext-quiver, the hammock function counts the
multiplicity of the ``k``-th simple in each module.  It is computed on
the translation plane of the opposite quiver: seed the source section of
``(0, k)`` (value 1 at ``(0, k)``, running products of second valuation
components along the section's sectional paths), then extend additively
through the successors of ``(0, k)``.

The decisive fact is the sign pattern of that extension: every value
stays non-negative until a single ``-1`` appears, at ``(m + 1, i)``
where the injective hull of the ``k``-th simple sits at translate ``m``
of the ``i``-th projective.  Knitting therefore stops at the first
negative value, which simultaneously locates the injective, the length
of the orbit, and the pairing of ``k`` with ``i``.

Knitting order: vertices are processed by increasing path length from
``(0, k)``.  Orbit ``i`` is met first at level ``r_i`` (the seed
section), and the vertex ``(r_i + p, i)`` has all paths from ``(0, k)``
of length ``len(walk k..i) + 2p``; every in-arrow source precedes its
target in this order, so all mesh inputs are available when needed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Mapping

from .dynkin import classify_quiver
from .errors import (
    BoundExceededError,
    KnitInconsistentError,
    PositionOutOfRangeError,
)
from .quiver import ValuedQuiver, reduced_walk
from .repetitive import (
    ZVertex,
    in_arrows,
    is_successor,
    safety_bound,
    sectional_path_from_walk,
    source_section,
)


@dataclass(frozen=True)
class HammockResult:
    """Knitted hammock values for one simple composition factor.

    ``table`` holds every value computed before (and including) the
    terminator; ``terminator`` is the unique vertex with value ``-1``.
    """

    quiver: ValuedQuiver
    k: int
    table: dict[ZVertex, int] = field(compare=False)
    terminator: ZVertex

    @property
    def orbit(self) -> int:
        """Base vertex whose projective orbit ends at the ``k``-th injective."""
        return self.terminator.base

    @property
    def orbit_index(self) -> int:
        """Number of translates: the injective sits at this translate."""
        return self.terminator.level - 1

    @property
    def injective_position(self) -> ZVertex:
        return ZVertex(self.orbit_index, self.orbit)


def seed_section(qop: ValuedQuiver, k: int) -> dict[ZVertex, int]:
    """Seed values on the source section of ``(0, k)``.

    1 at ``(0, k)``; along each sectional path of the section the running
    product of the second valuation components of its arrows.
    """
    section = source_section(qop, ZVertex(0, k))
    values: dict[ZVertex, int] = {}
    for j in qop.vertices():
        path = sectional_path_from_walk(qop, reduced_walk(qop, k, j), 0)
        value = 1
        for za in path.arrows:
            value *= za.val[1]
        values[path.end] = value
    assert set(values) == set(section.vertices)
    return values


def _knit_from_seed(
    qop: ValuedQuiver,
    k: int,
    seeds: Mapping[ZVertex, int],
    bound: int,
) -> tuple[dict[ZVertex, int], ZVertex]:
    """Knit forward from seeded section values until the first negative.

    Returns the table and the terminator.  Raises
    :class:`KnitInconsistentError` when the first negative is not exactly
    ``-1`` or the vertex directly before the terminator is not positive,
    and :class:`BoundExceededError` when no negative shows up within the
    level bound.
    """
    table = dict(seeds)
    # Heap keyed by (path length from (0, k), level, base).
    heap: list[tuple[int, int, int]] = []
    for v in seeds:
        walk_len = len(reduced_walk(qop, k, v.base))
        heapq.heappush(heap, (walk_len + 2, v.level + 1, v.base))
    while heap:
        length, level, base = heapq.heappop(heap)
        if level > bound:
            raise BoundExceededError(
                f"no negative hammock value within {bound} levels; "
                "input is not of finite type"
            )
        v = ZVertex(level, base)
        total = 0
        for za in in_arrows(qop, v):
            total += za.val[1] * table[za.src]
        value = total - table[v.translate()]
        table[v] = value
        if value < 0:
            if value != -1:
                raise KnitInconsistentError(
                    f"first negative value at {v} is {value}, not -1"
                )
            if table[v.translate()] <= 0:
                raise KnitInconsistentError(
                    f"value directly before the terminator {v} is not positive"
                )
            return table, v
        heapq.heappush(heap, (length + 2, level + 1, base))
    raise BoundExceededError("empty knitting frontier")  # pragma: no cover


def knit_hammock(q: ValuedQuiver, k: int) -> HammockResult:
    """Knit the hammock of vertex ``k`` of a Dynkin ext-quiver ``q``."""
    if not 1 <= k <= q.n:
        raise PositionOutOfRangeError(f"vertex {k} is not in 1..{q.n}")
    classify_quiver(q)
    qop = q.opposite()
    table, terminator = _knit_from_seed(
        qop, k, seed_section(qop, k), safety_bound(q.n)
    )
    return HammockResult(q, k, table, terminator)


def hammock_vertices(res: HammockResult) -> frozenset[ZVertex]:
    """Positions with positive value between ``(0, k)`` and the injective.

    These are exactly the modules containing the ``k``-th simple as a
    composition factor; the full subquiver they induce is the hammock.
    """
    qop = res.quiver.opposite()
    top = res.injective_position
    return frozenset(
        v for v, value in res.table.items() if value > 0 and is_successor(qop, v, top)
    )


def composition_multiplicity(res: HammockResult, pos: ZVertex) -> int:
    """Multiplicity of the ``k``-th simple in the module at ``pos``.

    ``pos`` must be a position of the finite translation quiver (supplied
    by the builder); positions outside the knitted table carry the
    ``k``-th simple zero times.
    """
    if not 1 <= pos.base <= res.quiver.n or pos.level < 0 or pos == res.terminator:
        raise PositionOutOfRangeError(f"{pos} is not a module position")
    return res.table.get(pos, 0)
