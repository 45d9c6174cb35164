"""Congruences, relative congruences, quotients and the lattice isomorphism
with the filter lattice.

A congruence is an equivalence relation compatible with both arrows; it is
relative when the quotient again satisfies all the axioms (only the
antisymmetry quasi-identity can break in a quotient).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from pbci.core import Algebra, InternalCheckError, check_pseudo_bci


@dataclass(frozen=True)
class Partition:
    """Partition of 0..n-1, normalized so block ids appear in element order."""

    block_id: tuple[int, ...]

    @staticmethod
    def from_parent(n, parent):
        ids = {}
        block_id = []
        for x in range(n):
            r = parent[x]
            if r not in ids:
                ids[r] = len(ids)
            block_id.append(ids[r])
        return Partition(tuple(block_id))

    @staticmethod
    def from_blocks(n, blocks):
        parent = [-1] * n
        for block in blocks:
            rep = min(block)
            for x in block:
                if parent[x] != -1:
                    raise ValueError(f"element {x} occurs in two blocks")
                parent[x] = rep
        if any(p < 0 for p in parent):
            raise ValueError("blocks do not cover the carrier")
        return Partition.from_parent(n, parent)

    @staticmethod
    def identity(n):
        return Partition(tuple(range(n)))

    @staticmethod
    def total(n):
        return Partition((0,) * n)

    @property
    def n(self):
        return len(self.block_id)

    def blocks(self):
        out = {}
        for x, b in enumerate(self.block_id):
            out.setdefault(b, []).append(x)
        return tuple(tuple(block) for _, block in sorted(out.items()))

    def related(self, x, y):
        return self.block_id[x] == self.block_id[y]

    def pair_set(self) -> frozenset:
        n = self.n
        return frozenset(
            (x, y) for x in range(n) for y in range(n) if self.related(x, y)
        )

    @staticmethod
    def from_pair_set(n, pairs):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x, y in pairs:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
        return Partition.from_parent(n, [find(x) for x in range(n)])

    def refines(self, other) -> bool:
        seen = {}
        for x in range(self.n):
            mine = self.block_id[x]
            if mine in seen:
                if seen[mine] != other.block_id[x]:
                    return False
            else:
                seen[mine] = other.block_id[x]
        return True


def is_congruence(a: Algebra, theta: Partition) -> bool:
    """Compatibility with both operation tables."""
    n = a.n
    for x, y in itertools.product(range(n), repeat=2):
        if not theta.related(x, y):
            continue
        for z in range(n):
            if not theta.related(a.arrow[x][z], a.arrow[y][z]):
                return False
            if not theta.related(a.arrow[z][x], a.arrow[z][y]):
                return False
            if not theta.related(a.squig[x][z], a.squig[y][z]):
                return False
            if not theta.related(a.squig[z][x], a.squig[z][y]):
                return False
    return True


def congruence_closure(a: Algebra, pairs) -> Partition:
    """Smallest congruence relating every pair in ``pairs``."""
    parent = list(range(a.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    for x, y in pairs:
        union(x, y)
    changed = True
    while changed:
        changed = False
        for x, y in itertools.product(range(a.n), repeat=2):
            if find(x) != find(y):
                continue
            for z in range(a.n):
                for table in (a.arrow, a.squig):
                    if union(table[x][z], table[y][z]):
                        changed = True
                    if union(table[z][x], table[z][y]):
                        changed = True
    return Partition.from_parent(a.n, [find(x) for x in range(a.n)])


def all_congruences(a: Algebra):
    """Every congruence, via join-closure of the principal congruences."""
    principals = set()
    for x in range(a.n):
        for y in range(x + 1, a.n):
            principals.add(congruence_closure(a, [(x, y)]))
    family = {Partition.identity(a.n)} | principals
    queue = list(family)
    while queue:
        current = queue.pop()
        for p in principals:
            joined = congruence_closure(
                a,
                [(x, y) for x in range(a.n) for y in range(a.n)
                 if current.related(x, y) or p.related(x, y)],
            )
            if joined not in family:
                family.add(joined)
                queue.append(joined)
    return sorted(family, key=lambda t: (len(set(t.block_id)), t.block_id),
                  reverse=False)


def quotient(a: Algebra, theta: Partition) -> Algebra:
    """The quotient algebra on blocks; representative = least block member.

    Well-definedness (independence of representatives) is verified; an
    incompatible partition is rejected with a witness.
    """
    if theta.n != a.n:
        raise ValueError("partition size mismatch")
    witness = _compatibility_witness(a, theta)
    if witness is not None:
        x, y, z, side = witness
        raise ValueError(
            f"partition is not compatible with {side} at "
            f"({a.names[x]}, {a.names[y]}, {a.names[z]})"
        )
    blocks = theta.blocks()
    reps = [min(block) for block in blocks]
    names = [a.names[r] for r in reps]
    arrow = [
        [theta.block_id[a.arrow[r][s]] for s in reps] for r in reps
    ]
    squig = [
        [theta.block_id[a.squig[r][s]] for s in reps] for r in reps
    ]
    return Algebra(names, theta.block_id[a.unit], arrow, squig)


def _compatibility_witness(a, theta):
    for x, y in itertools.product(range(a.n), repeat=2):
        if not theta.related(x, y):
            continue
        for z in range(a.n):
            if not theta.related(a.arrow[x][z], a.arrow[y][z]) or \
               not theta.related(a.arrow[z][x], a.arrow[z][y]):
                return (x, y, z, "arrow")
            if not theta.related(a.squig[x][z], a.squig[y][z]) or \
               not theta.related(a.squig[z][x], a.squig[z][y]):
                return (x, y, z, "squig")
    return None


def is_relative(a: Algebra, theta: Partition) -> bool:
    """Does the quotient satisfy all axioms (including antisymmetry)?"""
    if not is_congruence(a, theta):
        raise ValueError("not a congruence")
    return check_pseudo_bci(quotient(a, theta)).passed


def all_relative_congruences(a: Algebra):
    return [t for t in all_congruences(a) if check_pseudo_bci(quotient(a, t)).passed]


def relative_closure(a: Algebra, theta: Partition) -> Partition:
    """Least relative congruence above a congruence.

    Merges any pair of blocks violating antisymmetry in the quotient and
    recloses, until the quotient passes; identities survive quotients, so
    antisymmetry is the only repair needed.
    """
    current = theta
    while True:
        q = quotient(a, current)
        report = check_pseudo_bci(q)
        if report.passed:
            return current
        merged = False
        for xb in range(q.n):
            for yb in range(q.n):
                if xb != yb and q.arrow[xb][yb] == q.unit \
                        and q.arrow[yb][xb] == q.unit:
                    # quotient element indices coincide with block ids
                    x = current.block_id.index(xb)
                    y = current.block_id.index(yb)
                    pairs = [(i, j) for i in range(a.n) for j in range(a.n)
                             if current.related(i, j)]
                    pairs.append((x, y))
                    current = congruence_closure(a, pairs)
                    merged = True
                    break
            if merged:
                break
        if not merged:
            raise InternalCheckError(
                "quotient fails verification for a reason other than "
                f"antisymmetry: {report.summary()}"
            )


def join_relative(a: Algebra, phi: Partition, psi: Partition) -> Partition:
    """Join in the relative-congruence lattice.

    Computed as the relative closure of the congruence join; cross-checked
    against the filter route (the congruence of the filter generated by the
    union of the two kernels).
    """
    from pbci.filters import filter_generated, kernel, theta_from_filter

    pairs = [(x, y) for x in range(a.n) for y in range(a.n)
             if phi.related(x, y) or psi.related(x, y)]
    via_closure = relative_closure(a, congruence_closure(a, pairs))
    seed = kernel(a, phi) | kernel(a, psi)
    via_filters = theta_from_filter(a, filter_generated(a, seed))
    if via_closure != via_filters:
        raise InternalCheckError(
            "relative-congruence join disagrees with the filter-join route"
        )
    return via_closure


def meet_relative(phi: Partition, psi: Partition) -> Partition:
    """Meet = intersection of the relations (always relative again)."""
    n = phi.n
    pairs = [(x, y) for x in range(n) for y in range(n)
             if phi.related(x, y) and psi.related(x, y)]
    return Partition.from_pair_set(n, pairs)


def compose_contains_unit_pair(a: Algebra, phi: Partition, psi: Partition, x: int) -> bool:
    """(x, 1) in phi o psi: some b with (x, b) in phi and (b, 1) in psi."""
    return any(
        phi.related(x, b) and psi.related(b, a.unit) for b in range(a.n)
    )


def join_characterization(a: Algebra, phi: Partition, psi: Partition) -> bool:
    """For every x: (x,1) in the relative join iff in phi o psi iff in psi o phi."""
    join = join_relative(a, phi, psi)
    for x in range(a.n):
        in_join = join.related(x, a.unit)
        if in_join != compose_contains_unit_pair(a, phi, psi, x):
            return False
        if in_join != compose_contains_unit_pair(a, psi, phi, x):
            return False
    return True


def relcong_lattice(a: Algebra):
    """The lattice of relative congruences (ordered by refinement).

    Returned as a :class:`pbci.lattice.FiniteLattice` whose labels are the
    partitions; meets are relation intersections and joins are least family
    members above the union, which agree with the relative-congruence
    operations.
    """
    from pbci.lattice import from_closed_family

    thetas = all_relative_congruences(a)
    return from_closed_family(
        [t.pair_set() for t in thetas],
        labels=thetas,
    )


def iso_with_filters(a: Algebra) -> bool:
    """Verify that kernel-taking is a lattice isomorphism onto the filters.

    Both directions are checked: the map is a bijection between the relative
    congruences and the filter family, and both it and its inverse preserve
    order; joins and meets therefore correspond.
    """
    from pbci.filters import all_filters, kernel, theta_from_filter

    thetas = all_relative_congruences(a)
    fils = all_filters(a)
    kernels = [kernel(a, t) for t in thetas]
    if sorted(kernels, key=lambda s: (len(s), sorted(s))) != fils:
        return False
    if len(set(kernels)) != len(kernels):
        return False
    for t, k in zip(thetas, kernels):
        if theta_from_filter(a, k) != t:
            return False
    for t1, k1 in zip(thetas, kernels):
        for t2, k2 in zip(thetas, kernels):
            if t1.refines(t2) != (k1 <= k2):
                return False
    return True
