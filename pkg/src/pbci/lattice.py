"""Finite lattices and identity checking: modular, distributive, arguesian."""

from __future__ import annotations

from array import array

from pbci import kernels
from pbci.core import CapExceededError

ARGUESIAN_SIZE_CAP = 40


class FiniteLattice:
    """Finite lattice given by its order relation.

    ``labels`` are opaque display handles; ``sets`` optionally keeps the
    underlying subsets when the lattice came from a closed family.  Join and
    meet tables are computed and the lattice laws verified at construction.
    """

    __slots__ = ("m", "labels", "leq", "join", "meet", "sets", "_flat")

    def __init__(self, labels, leq, sets=None):
        labels = tuple(labels)
        m = len(labels)
        if m == 0:
            raise ValueError("lattice must be nonempty")
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        for x in range(m):
            if not leq[x][x]:
                raise ValueError("order not reflexive")
            for y in range(m):
                if x != y and leq[x][y] and leq[y][x]:
                    raise ValueError("order not antisymmetric")
                for z in range(m):
                    if leq[x][y] and leq[y][z] and not leq[x][z]:
                        raise ValueError("order not transitive")
        join = [[-1] * m for _ in range(m)]
        meet = [[-1] * m for _ in range(m)]
        for x in range(m):
            for y in range(m):
                uppers = [z for z in range(m) if leq[x][z] and leq[y][z]]
                least = [z for z in uppers
                         if all(leq[z][w] for w in uppers)]
                if len(least) != 1:
                    raise ValueError(
                        f"no least upper bound for {labels[x]!r}, {labels[y]!r}"
                    )
                join[x][y] = least[0]
                lowers = [z for z in range(m) if leq[z][x] and leq[z][y]]
                greatest = [z for z in lowers
                            if all(leq[w][z] for w in lowers)]
                if len(greatest) != 1:
                    raise ValueError(
                        f"no greatest lower bound for {labels[x]!r}, {labels[y]!r}"
                    )
                meet[x][y] = greatest[0]
        self.m = m
        self.labels = labels
        self.leq = leq
        self.join = tuple(tuple(row) for row in join)
        self.meet = tuple(tuple(row) for row in meet)
        self.sets = tuple(sets) if sets is not None else None
        self._flat = None

    def flat_tables(self):
        if self._flat is None:
            self._flat = (
                array("i", [v for row in self.join for v in row]),
                array("i", [v for row in self.meet for v in row]),
            )
        return self._flat

    @property
    def bottom(self):
        for x in range(self.m):
            if all(self.leq[x][y] for y in range(self.m)):
                return x
        raise ValueError("no bottom element")

    @property
    def top(self):
        for x in range(self.m):
            if all(self.leq[y][x] for y in range(self.m)):
                return x
        raise ValueError("no top element")

    def __repr__(self):
        return f"FiniteLattice(m={self.m})"


def from_closed_family(family, labels=None):
    """Lattice of an intersection-closed family of sets with a top.

    Meet is intersection; join is the least family member containing the
    union.  Raises when the family is not meet-closed.
    """
    family = list(family)
    sets = [frozenset(s) for s in family]
    if len(set(sets)) != len(sets):
        raise ValueError("family contains duplicates")
    index = {s: i for i, s in enumerate(sets)}
    union_all = frozenset().union(*sets) if sets else frozenset()
    if union_all not in index:
        raise ValueError("family has no top")
    for i, s in enumerate(sets):
        for t in sets[i + 1:]:
            if (s & t) not in index:
                raise ValueError(
                    f"family not closed under intersection: {sorted(s & t)}"
                )
    m = len(sets)
    leq = [[sets[x] <= sets[y] for y in range(m)] for x in range(m)]
    if labels is None:
        labels = [tuple(sorted(s)) for s in sets]
    return FiniteLattice(labels, leq, sets=sets)


def _witness(lattice, indices):
    return tuple(lattice.labels[i] for i in indices)


def is_modular(lattice: FiniteLattice):
    """(verdict, witness): x <= z implies x v (y ^ z) == (x v y) ^ z."""
    m, join, meet, leq = lattice.m, lattice.join, lattice.meet, lattice.leq
    for x in range(m):
        for y in range(m):
            for z in range(m):
                if leq[x][z] and join[x][meet[y][z]] != meet[join[x][y]][z]:
                    return False, _witness(lattice, (x, y, z))
    return True, None


def is_distributive(lattice: FiniteLattice):
    """(verdict, witness): x ^ (y v z) == (x ^ y) v (x ^ z)."""
    m, join, meet = lattice.m, lattice.join, lattice.meet
    for x in range(m):
        for y in range(m):
            for z in range(m):
                if meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]:
                    return False, _witness(lattice, (x, y, z))
    return True, None


def is_arguesian(lattice: FiniteLattice, cap: int = ARGUESIAN_SIZE_CAP):
    """(verdict, witness) for the 6-variable arguesian identity.

    Exhaustive over all 6-tuples with early exit; the witness is the first
    failing tuple in lexicographic (x1, y1, x2, y2, x3, y3) order.
    """
    if lattice.m > cap:
        raise CapExceededError(
            f"lattice size {lattice.m} exceeds the arguesian scan cap {cap}"
        )
    join, meet = lattice.flat_tables()
    found = kernels.arguesian_witness(join, meet, lattice.m)
    if found is None:
        return True, None
    return False, _witness(lattice, found)


def is_sublattice(sub: FiniteLattice, sup: FiniteLattice) -> bool:
    """Do joins and meets of ``sup`` restrict to those of ``sub``?

    Both lattices must carry ``sets``; the sub-family must be included in
    the super-family element-wise.
    """
    if sub.sets is None or sup.sets is None:
        raise ValueError("sublattice test needs set-based lattices")
    index = {s: i for i, s in enumerate(sup.sets)}
    try:
        embed = [index[s] for s in sub.sets]
    except KeyError as exc:
        raise ValueError(f"element {sorted(exc.args[0])} missing from the "
                         "super-lattice") from None
    for x in range(sub.m):
        for y in range(sub.m):
            if embed[sub.join[x][y]] != sup.join[embed[x]][embed[y]]:
                return False
            if embed[sub.meet[x][y]] != sup.meet[embed[x]][embed[y]]:
                return False
    return True


def counterexample_lattices():
    """The two classic test lattices: the pentagon and the diamond."""
    # pentagon: 0 < a < c < 1 and 0 < b < 1
    n5_leq = [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ]
    n5 = FiniteLattice(("0", "a", "b", "c", "1"), n5_leq)
    # diamond: three incomparable atoms between 0 and 1
    m3_leq = [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ]
    m3 = FiniteLattice(("0", "a", "b", "c", "1"), m3_leq)
    return n5, m3
