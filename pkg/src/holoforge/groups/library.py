"""Small named groups and enumerations of GL_n(p)."""

from __future__ import annotations

from itertools import product

from ..matrix import Matrix, is_invertible
from ..ring import RingSpec
from .core import CyclicGroup, DirectProduct, FiniteGroup, MatrixGroup, PermutationGroup


def cyclic(n: int) -> CyclicGroup:
    return CyclicGroup(n)


def abelian(*orders: int) -> FiniteGroup:
    if len(orders) == 1:
        return CyclicGroup(orders[0])
    G = DirectProduct(*(CyclicGroup(n) for n in orders))
    G.name = " x ".join(f"C_{n}" for n in orders)
    return G


def dihedral(n: int) -> PermutationGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple(-i % n for i in range(n))
    G = PermutationGroup([rot, ref])
    G.name = f"D_{2 * n}"
    return G


def quaternion() -> MatrixGroup:
    """Q_8 inside GL_2(3)."""
    F = RingSpec(3)
    G = MatrixGroup([Matrix.from_rows(F, [[0, -1], [1, 0]]), Matrix.from_rows(F, [[1, 1], [1, -1]])])
    G.name = "Q_8"
    return G


def groups_of_order_8() -> dict[str, FiniteGroup]:
    return {"C_8": abelian(8), "C_4 x C_2": abelian(4, 2), "C_2^3": abelian(2, 2, 2),
            "D_8": dihedral(4), "Q_8": quaternion()}


def general_linear(p: int, n: int) -> list[Matrix]:
    """All of GL_n(p), in lexicographic order of row-major entries."""
    F = RingSpec(p)
    out = []
    for entries in product(range(p), repeat=n * n):
        a = Matrix(F, n, n, entries)
        if is_invertible(a):
            out.append(a)
    return out


def cyclic_subgroup(a: Matrix) -> frozenset:
    powers = {Matrix.identity(a.ring, a.rows)}
    x = a
    while x not in powers:
        powers.add(x)
        x = x @ a
    return frozenset(powers)


def cyclic_subgroup_classes(elements: list[Matrix]) -> list[list[Matrix]]:
    """Partition of the given GL_n(p) into GL-conjugacy classes of cyclic subgroups.

    Each class lists one generator per cyclic subgroup in it; classes are
    ordered by subgroup order, then by where their first generator is listed.
    """
    inv = {x: x ** -1 for x in elements}
    index = {x: i for i, x in enumerate(elements)}
    seen: dict[frozenset, int] = {}
    classes: list[list[Matrix]] = []
    for a in elements:
        S = cyclic_subgroup(a)
        if S in seen:
            continue
        cls_id = len(classes)
        members = []
        for x in elements:
            T = frozenset(x @ s @ inv[x] for s in S)
            if T not in seen:
                seen[T] = cls_id
                members.append(x @ a @ inv[x])
        classes.append(members)
    classes.sort(key=lambda c: (len(cyclic_subgroup(c[0])), index[c[0]]))
    return classes
