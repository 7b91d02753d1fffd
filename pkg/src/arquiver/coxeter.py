"""Coxeter transformation on the Grothendieck group, and its order.

The transformation is pinned down by sending each projective dimension
vector to minus the matching injective one.  Solving ``C * Cartan =
-Inj`` is done exactly over the integers: permuting rows and columns
into a topological order of the ext-quiver makes the Cartan matrix unit
lower triangular (projectives only contain simples reachable along
arrows), so its inverse comes from forward substitution and stays
integral.  All arithmetic uses Python integers, so no overflow is
possible.

The order of the transformation depends only on the underlying diagram,
never on the orientation; ``table_order`` holds the per-family values
and `order_identity_check` ties the computed order to both the table and
the orbit-length identity ``m(i) + m(rho(i)) + 2``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import OrderBoundExceededError, SingularCartanError
from .dynkin import DynkinClass

if TYPE_CHECKING:
    from .ar_quiver import ARQuiver
    from .derived import DerivedVertex

Matrix = tuple[tuple[int, ...], ...]

ORDER_BOUND = 60  # twice the largest tabled order


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_vec(a: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def mat_pow(a: Matrix, t: int) -> Matrix:
    result = identity_matrix(len(a))
    for _ in range(t):
        result = mat_mul(result, a)
    return result


@dataclass(frozen=True)
class CoxeterData:
    cartan: Matrix  # column i is the dimension vector of the i-th projective
    inj: Matrix  # column i is the dimension vector of the i-th injective
    matrix: Matrix  # sends column i of cartan to minus column i of inj
    order: int


def _topological_vertex_order(arq: "ARQuiver") -> list[int]:
    """Ext-quiver vertices with every arrow pointing forward."""
    q = arq.quiver
    indeg = {x: len(q.in_arrows(x)) for x in q.vertices()}
    queue = deque(sorted(x for x in q.vertices() if indeg[x] == 0))
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for a in q.out_arrows(x):
            indeg[a.dst] -= 1
            if indeg[a.dst] == 0:
                queue.append(a.dst)
    return order


def _unit_lower_inverse(l: Matrix) -> Matrix:
    """Exact inverse of a unit lower triangular integer matrix."""
    n = len(l)
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j + 1, n):
            inv[i][j] = -sum(l[i][k] * inv[k][j] for k in range(j, i))
    return tuple(tuple(row) for row in inv)


def coxeter_matrix(arq: "ARQuiver") -> CoxeterData:
    """Solve for the transformation exactly and find its matrix order."""
    n = arq.n
    cartan = tuple(
        tuple(arq.dims[arq.projective(j + 1)][i] for j in range(n)) for i in range(n)
    )
    inj = tuple(
        tuple(arq.dims[arq.injective(j + 1)][i] for j in range(n)) for i in range(n)
    )

    sigma = _topological_vertex_order(arq)
    if len(sigma) != n:
        raise SingularCartanError("ext-quiver has an oriented cycle")
    permuted = tuple(
        tuple(cartan[sigma[i] - 1][sigma[j] - 1] for j in range(n)) for i in range(n)
    )
    for i in range(n):
        if permuted[i][i] != 1 or any(permuted[i][j] for j in range(i + 1, n)):
            raise SingularCartanError(
                "Cartan matrix is not unitriangular in topological order"
            )
    permuted_inv = _unit_lower_inverse(permuted)
    cartan_inv = tuple(
        tuple(permuted_inv[sigma.index(i + 1)][sigma.index(j + 1)] for j in range(n))
        for i in range(n)
    )
    matrix = mat_mul(mat_neg(inj), cartan_inv)
    if mat_mul(matrix, cartan) != mat_neg(inj):
        raise SingularCartanError("integral solve failed to reproduce -Inj")

    ident = identity_matrix(n)
    power = matrix
    order = None
    for t in range(1, ORDER_BOUND + 1):
        if power == ident:
            order = t
            break
        power = mat_mul(power, matrix)
    if order is None:
        raise OrderBoundExceededError(f"no identity power within {ORDER_BOUND}")
    return CoxeterData(cartan, inj, matrix, order)


def table_order(dynkin: DynkinClass) -> int:
    """Orientation-independent order of the transformation, per family."""
    n = dynkin.rank
    if dynkin.family == "A":
        return n + 1
    if dynkin.family in ("B", "C"):
        return 2 * n
    if dynkin.family == "D":
        return 2 * (n - 1)
    if dynkin.family == "E":
        return {6: 12, 7: 18, 8: 30}[n]
    if dynkin.family == "F":
        return 12
    return 6  # G2


def order_identity_check(arq: "ARQuiver", cd: CoxeterData) -> bool:
    """Order equals the table value and every paired orbit-length sum."""
    if cd.order != table_order(arq.dynkin):
        return False
    return all(
        arq.m_of(i) + arq.m_of(arq.rho_of(i)) + 2 == cd.order
        for i in arq.quiver.vertices()
    )


def signed_dim(arq: "ARQuiver", v: "DerivedVertex") -> tuple[int, ...]:
    """Dimension vector of a shifted stalk: the sign alternates with the shift."""
    base = arq.dims[v.position]
    sign = -1 if v.shift % 2 else 1
    return tuple(sign * x for x in base)


def derived_dim_check(
    arq: "ARQuiver",
    cd: CoxeterData,
    samples: Iterable[tuple["DerivedVertex", int]],
) -> bool:
    """Translate-then-measure equals measure-then-transform, on samples.

    For each ``(vertex, t)``: apply the derived translation ``t`` times
    (backwards for negative ``t``) and compare the signed dimension
    vector with the ``t``-th matrix power applied to the original one.
    """
    from .derived import tau_d, tau_d_inverse

    inverse = mat_pow(cd.matrix, cd.order - 1)
    for v, t in samples:
        w = v
        for _ in range(abs(t)):
            w = tau_d(arq, w) if t > 0 else tau_d_inverse(arq, w)
        step = cd.matrix if t > 0 else inverse
        vec = signed_dim(arq, v)
        for _ in range(abs(t)):
            vec = mat_vec(step, vec)
        if vec != signed_dim(arq, w):
            return False
    return True
