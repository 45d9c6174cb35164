"""Structural invariants: integral part, group part, the canonical
homomorphisms onto the group part, and the product/union constructions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from pbci.core import (
    Algebra,
    CapExceededError,
    InternalCheckError,
    check_pseudo_bci,
    derive_order,
)

PRODUCT_SIZE_CAP = 4096


def integral_part(a: Algebra) -> frozenset:
    """{x : x <= 1}: the largest subuniverse carrying a pseudo-BCK-algebra."""
    return frozenset(x for x in range(a.n) if a.arrow[x][a.unit] == a.unit)


def group_part(a: Algebra) -> frozenset:
    """{x -> 1 : x in A}: the set of maximal elements of the derived order."""
    return frozenset(a.arrow[x][a.unit] for x in range(a.n))


def is_subuniverse(a: Algebra, subset) -> bool:
    """Closed under both arrows and contains the unit."""
    if a.unit not in subset:
        return False
    return all(
        a.arrow[x][y] in subset and a.squig[x][y] in subset
        for x in subset for y in subset
    )


def restrict(a: Algebra, subset) -> Algebra:
    """The induced subalgebra on a subuniverse (element order preserved)."""
    if not is_subuniverse(a, subset):
        raise ValueError(f"{a.subset_names(subset)} is not a subuniverse")
    elems = sorted(subset)
    pos = {x: i for i, x in enumerate(elems)}
    names = [a.names[x] for x in elems]
    arrow = [[pos[a.arrow[x][y]] for y in elems] for x in elems]
    squig = [[pos[a.squig[x][y]] for y in elems] for x in elems]
    return Algebra(names, pos[a.unit], arrow, squig)


@dataclass(frozen=True)
class GroupView:
    """The group carried by the group part: g*h == (g -> 1) ~> h.

    ``elements`` are carrier indices of the owning algebra in increasing
    order; ``mult`` and ``inv`` are tables over positions in ``elements``.
    """

    elements: tuple[int, ...]
    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    unit: int  # position of the algebra unit within `elements`

    @property
    def order(self) -> int:
        return len(self.elements)

    def position(self, carrier_index: int) -> int:
        return self.elements.index(carrier_index)


def _verify_group(elements, mult, inv, unit):
    m = len(elements)
    for i, j, k in itertools.product(range(m), repeat=3):
        if mult[mult[i][j]][k] != mult[i][mult[j][k]]:
            return ("associativity", (i, j, k))
    for i in range(m):
        if mult[unit][i] != i or mult[i][unit] != i:
            return ("identity", (i,))
        if mult[i][inv[i]] != unit or mult[inv[i]][i] != unit:
            return ("inverses", (i,))
    return None


def group_view(a: Algebra) -> GroupView:
    """Extract the group structure of the group part and verify it.

    Also checks the recovery identities g -> h == h*g^-1 and
    g ~> h == g^-1*h on the group part.
    """
    elems = tuple(sorted(group_part(a)))
    pos = {x: i for i, x in enumerate(elems)}
    u = a.unit
    mult = tuple(
        tuple(pos[a.squig[a.arrow[g][u]][h]] for h in elems) for g in elems
    )
    inv = tuple(pos[a.arrow[g][u]] for g in elems)
    view = GroupView(elems, mult, inv, pos[u])
    failure = _verify_group(elems, mult, inv, pos[u])
    if failure is not None:
        law, witness = failure
        raise InternalCheckError(
            f"group part fails {law} at "
            f"({', '.join(a.names[elems[i]] for i in witness)})"
        )
    for gi, g in enumerate(elems):
        for hi, h in enumerate(elems):
            if pos[a.arrow[g][h]] != mult[hi][inv[gi]]:
                raise InternalCheckError("arrow recovery identity fails")
            if pos[a.squig[g][h]] != mult[inv[gi]][hi]:
                raise InternalCheckError("squig recovery identity fails")
    return view


@dataclass(frozen=True)
class HomomorphismWitness:
    """A verified homomorphism given by its value table.

    ``twisted`` records that the codomain is the dagger of the group-part
    subalgebra (the two arrows land swapped).
    """

    mapping: tuple[int, ...]
    kernel: frozenset
    twisted: bool


def _verify_group_hom(a: Algebra, mapping, twisted: bool):
    arr, sq = a.arrow, a.squig
    to_arrow, to_squig = (sq, arr) if twisted else (arr, sq)
    for x in range(a.n):
        for y in range(a.n):
            if mapping[arr[x][y]] != to_arrow[mapping[x]][mapping[y]]:
                return (x, y)
            if mapping[sq[x][y]] != to_squig[mapping[x]][mapping[y]]:
                return (x, y)
    return None


def gamma(a: Algebra) -> HomomorphismWitness:
    """x |-> x -> 1, a homomorphism onto the dagger of the group part."""
    u = a.unit
    mapping = tuple(a.arrow[x][u] for x in range(a.n))
    bad = _verify_group_hom(a, mapping, twisted=True)
    if bad is not None:
        raise InternalCheckError(
            f"gamma is not a homomorphism at ({a.names[bad[0]]}, {a.names[bad[1]]})"
        )
    kernel = frozenset(x for x in range(a.n) if mapping[x] == u)
    if kernel != integral_part(a):
        raise InternalCheckError("kernel of gamma differs from the integral part")
    return HomomorphismWitness(mapping, kernel, twisted=True)


def delta(a: Algebra) -> HomomorphismWitness:
    """x |-> (x -> 1) -> 1, a homomorphism onto the group part.

    delta(x) is the unique maximal element above x.
    """
    u = a.unit
    mapping = tuple(a.arrow[a.arrow[x][u]][u] for x in range(a.n))
    bad = _verify_group_hom(a, mapping, twisted=False)
    if bad is not None:
        raise InternalCheckError(
            f"delta is not a homomorphism at ({a.names[bad[0]]}, {a.names[bad[1]]})"
        )
    kernel = frozenset(x for x in range(a.n) if mapping[x] == u)
    if kernel != integral_part(a):
        raise InternalCheckError("kernel of delta differs from the integral part")
    order = derive_order(a)
    gp = group_part(a)
    for x in range(a.n):
        above = [g for g in gp if order.is_leq(x, g)]
        if above != [mapping[x]]:
            raise InternalCheckError(
                f"delta({a.names[x]}) is not the unique maximal element above it"
            )
    return HomomorphismWitness(mapping, kernel, twisted=False)


def integral_residue(a: Algebra, x: int) -> int:
    """((x -> 1) -> 1) -> x, always a member of the integral part."""
    u = a.unit
    return a.arrow[a.arrow[a.arrow[x][u]][u]][x]


def is_p_semisimple(a: Algebra) -> bool:
    """Group part equals the whole carrier (the algebra is a group in disguise)."""
    return len(group_part(a)) == a.n


def direct_product(a: Algebra, b: Algebra, max_size: int = PRODUCT_SIZE_CAP) -> Algebra:
    """Componentwise product with "(x,y)" element names."""
    if a.n * b.n > max_size:
        raise CapExceededError(
            f"product size {a.n * b.n} exceeds the cap {max_size}"
        )
    pairs = [(x, y) for x in range(a.n) for y in range(b.n)]
    pos = {p: i for i, p in enumerate(pairs)}
    names = [f"({a.names[x]},{b.names[y]})" for x, y in pairs]
    arrow = [
        [pos[a.arrow[x1][x2], b.arrow[y1][y2]] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    squig = [
        [pos[a.squig[x1][x2], b.squig[y1][y2]] for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    return Algebra(names, pos[a.unit, b.unit], arrow, squig)


def group_to_algebra(mult, names=None, unit: int = 0) -> Algebra:
    """Turn a group multiplication table into the derived two-arrow algebra.

    g -> h == h*g^-1 and g ~> h == g^-1*h.  A table violating the group
    axioms is rejected with the failing law and witness.
    """
    mult = tuple(tuple(row) for row in mult)
    m = len(mult)
    if any(len(row) != m for row in mult):
        raise ValueError("multiplication table must be square")
    if any(not 0 <= v < m for row in mult for v in row):
        raise ValueError("multiplication table entry out of range")
    inv = [-1] * m
    for g in range(m):
        for h in range(m):
            if mult[g][h] == unit and mult[h][g] == unit:
                inv[g] = h
                break
        if inv[g] < 0:
            raise ValueError(f"group axiom inverses fails at ({g},)")
    failure = _verify_group(tuple(range(m)), mult, tuple(inv), unit)
    if failure is not None:
        law, witness = failure
        raise ValueError(f"group axiom {law} fails at {witness}")
    if names is None:
        names = [f"g{i}" if i != unit else "1" for i in range(m)]
    arrow = [[mult[h][inv[g]] for h in range(m)] for g in range(m)]
    squig = [[mult[inv[g]][h] for h in range(m)] for g in range(m)]
    return Algebra(names, unit, arrow, squig)


def union_construction(b: Algebra, h: Algebra, rename: bool = True) -> Algebra:
    """Glue a pseudo-BCK-algebra and a group-derived algebra at the unit.

    The carrier is the disjoint union with units identified.  Mixed values:
    x <> y == y for x in B, y in H; x <> y == x^-1 for x in H\\{1}, y in B
    (both arrows alike).  Name clashes outside the unit are resolved by
    suffixing the group names, unless ``rename`` is disabled.
    """
    if not check_pseudo_bci(b).passed:
        raise ValueError("first factor is not a verified pseudo-BCI-algebra")
    if any(b.arrow[x][b.unit] != b.unit for x in range(b.n)):
        raise ValueError("first factor must be a pseudo-BCK-algebra")
    if not is_p_semisimple(h):
        raise ValueError("second factor must be a group-derived algebra")
    hv = group_view(h)

    b_names = list(b.names)
    h_names = [h.names[g] for g in range(h.n)]
    clash = (set(b_names) & set(h_names)) - {h.names[h.unit]}
    if clash:
        if not rename:
            raise ValueError(
                f"element names {sorted(clash)} appear in both factors"
            )
        h_names = [
            s + "'" if s in set(b_names) and g != h.unit else s
            for g, s in enumerate(h_names)
        ]
    # carrier: all of B, then H without its unit
    h_elems = [g for g in range(h.n) if g != h.unit]
    names = b_names + [h_names[g] for g in h_elems]
    n = len(names)
    unit = b.unit

    def side(i):
        return "b" if i < b.n else "h"

    def h_index(i):
        return h_elems[i - b.n]

    def from_h(g):
        return unit if g == h.unit else b.n + h_elems.index(g)

    def op(table_b, table_h, x, y):
        sx, sy = side(x), side(y)
        # the shared unit belongs to both factors; treat it as the side of
        # the other operand so each case lands in a single factor
        if x == unit and sy == "h":
            sx = "h"
        if y == unit and sx == "h":
            sy = "h"
        if sx == "b" and sy == "b":
            return table_b[x][y]
        if sx == "h" and sy == "h":
            gx = h.unit if x == unit else h_index(x)
            gy = h.unit if y == unit else h_index(y)
            return from_h(table_h[gx][gy])
        if sx == "b":  # y strictly in H
            return y
        # x strictly in H, y in B
        gx = h_index(x)
        return from_h(hv.elements[hv.inv[hv.position(gx)]])

    arrow = [[op(b.arrow, h.arrow, x, y) for y in range(n)] for x in range(n)]
    squig = [[op(b.squig, h.squig, x, y) for y in range(n)] for x in range(n)]
    return Algebra(names, unit, arrow, squig)


# ---------------------------------------------------------------------------
# Small groups (complete up to isomorphism for order <= 8)


def cyclic_group(m: int):
    """Multiplication table of Z_m."""
    return [[(i + j) % m for j in range(m)] for i in range(m)]


def group_product(g1, g2):
    """Multiplication table of the direct product of two group tables."""
    m1, m2 = len(g1), len(g2)
    pairs = [(i, j) for i in range(m1) for j in range(m2)]
    pos = {p: k for k, p in enumerate(pairs)}
    return [
        [pos[g1[i1][i2], g2[j1][j2]] for (i2, j2) in pairs]
        for (i1, j1) in pairs
    ]


def dihedral_group(m: int):
    """Multiplication table of the dihedral group of order 2m.

    Elements 0..m-1 are rotations r^i, elements m..2m-1 are reflections
    s*r^i, with s*r*s == r^-1.
    """
    size = 2 * m

    def mul(a, b):
        ra, fa = a % m, a // m
        rb, fb = b % m, b // m
        # (s^fa r^ra)(s^fb r^rb) == s^(fa+fb) r^(rb +- ra)
        if fb == 0:
            return (fa * m) + (ra + rb) % m
        return ((1 - fa) * m) + (rb - ra) % m

    return [[mul(a, b) for b in range(size)] for a in range(size)]


def quaternion_group():
    """Multiplication table of the quaternion group of order 8.

    Elements: 1, -1, i, -i, j, -j, k, -k.
    """
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1",
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        if a == "1":
            r = b
        elif b == "1":
            r = a
        else:
            r = base[(a, b)]
        if r.startswith("-"):
            sign, r = -sign, r[1:]
        return r if sign > 0 else "-" + r

    pos = {s: i for i, s in enumerate(names)}
    return [[pos[mul(a, b)] for b in names] for a in names]


def small_groups(m: int):
    """All groups of order m up to isomorphism, as (label, table) pairs.

    Complete for m <= 8 (the catalog of cyclic groups, products of cyclic
    groups, dihedral groups and the quaternion group covers every class).
    """
    if m < 1:
        raise ValueError("group order must be positive")
    if m > 8:
        raise CapExceededError("small-group catalog is complete only up to order 8")
    catalog = {
        1: [("Z1", cyclic_group(1))],
        2: [("Z2", cyclic_group(2))],
        3: [("Z3", cyclic_group(3))],
        4: [("Z4", cyclic_group(4)),
            ("Z2xZ2", group_product(cyclic_group(2), cyclic_group(2)))],
        5: [("Z5", cyclic_group(5))],
        6: [("Z6", cyclic_group(6)), ("D3", dihedral_group(3))],
        7: [("Z7", cyclic_group(7))],
        8: [("Z8", cyclic_group(8)),
            ("Z4xZ2", group_product(cyclic_group(4), cyclic_group(2))),
            ("Z2xZ2xZ2", group_product(
                cyclic_group(2),
                group_product(cyclic_group(2), cyclic_group(2)))),
            ("D4", dihedral_group(4)),
            ("Q8", quaternion_group())],
    }
    return catalog[m]
