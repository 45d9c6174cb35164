"""Embedding of a verified algebra into the residuation reduct of a
semi-integral residuated po-monoid.

Pipeline: words over the carrier induce image sets J(word) = {x : word -> x
== 1}; these form a po-monoid under inclusion with J(v)*J(w) == J(vw).  The
order-filters of that po-monoid that sit above a single minimal element form
a residuated po-monoid, and x |-> {J(word) : x in J(word)} embeds the
algebra into its residuation reduct.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from pbci import kernels
from pbci.core import (
    Algebra,
    CapExceededError,
    InternalCheckError,
    VerificationReport,
    Violation,
    _axiom_checkers,
    _make_report,
    _run_checkers,
    word_arrow,
)
from pbci.structure import group_part, group_view

WORD_MONOID_CAP = 18


def _bits(mask):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class WordMonoid:
    """Po-monoid of word-image sets, ordered by inclusion.

    ``masks[i]`` is the carrier subset as a bitmask, ``reps[i]`` the first
    (shortest) word found producing it, ``group_member[i]`` the unique
    group-part element the set contains.
    """

    algebra: Algebra
    masks: tuple[int, ...]
    reps: tuple[tuple[int, ...], ...]
    star: tuple[tuple[int, ...], ...]
    unit: int
    group_member: tuple[int, ...]

    @property
    def m(self):
        return len(self.masks)

    def leq(self, i, j):
        return self.masks[i] | self.masks[j] == self.masks[j]

    def minimal_elements(self):
        return [i for i in range(self.m)
                if not any(j != i and self.leq(j, i) for j in range(self.m))]

    def label(self, i):
        a = self.algebra
        return "{" + ",".join(a.names[x] for x in _bits(self.masks[i])) + "}"


def _image_mask(a: Algebra, word) -> int:
    mask = 0
    for x in range(a.n):
        if word_arrow(a, word, x) == a.unit:
            mask |= 1 << x
    return mask


def word_image(a: Algebra, word) -> frozenset:
    """{x : word -> x == 1}, the image set of a nonempty word."""
    return frozenset(_bits(_image_mask(a, word)))


def build_word_monoid(a: Algebra, cap: int = WORD_MONOID_CAP) -> WordMonoid:
    """Close the single-letter image sets under word extension.

    Deduplication is by image set; breadth-first search keeps the shortest
    representative word.  Raises :class:`CapExceededError` when more than
    ``cap`` distinct sets appear.
    """
    index = {}
    masks = []
    reps = []
    queue = []
    for x in range(a.n):
        mask = _image_mask(a, (x,))
        if mask not in index:
            index[mask] = len(masks)
            masks.append(mask)
            reps.append((x,))
            queue.append(mask)
    while queue:
        mask = queue.pop(0)
        rep = reps[index[mask]]
        for x in range(a.n):
            # J(word + x) == {v : x -> v in J(word)}
            ext = 0
            for v in range(a.n):
                if mask >> a.arrow[x][v] & 1:
                    ext |= 1 << v
            if ext not in index:
                if len(masks) >= cap:
                    raise CapExceededError(
                        f"word monoid exceeds {cap} elements"
                    )
                index[ext] = len(masks)
                masks.append(ext)
                reps.append(rep + (x,))
                queue.append(ext)
    m = len(masks)
    star = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            word = reps[i] + reps[j]
            direct = _image_mask(a, word)
            stepped = 0
            for v in range(a.n):
                if masks[i] >> word_arrow(a, reps[j], v) & 1:
                    stepped |= 1 << v
            if direct != stepped:
                raise InternalCheckError(
                    "product of image sets depends on the representative "
                    f"words {reps[i]} and {reps[j]}"
                )
            try:
                star[i][j] = index[direct]
            except KeyError:
                raise InternalCheckError(
                    "image sets are not closed under products"
                ) from None
    unit = index[_image_mask(a, (a.unit,))]
    gmask = 0
    for g in group_part(a):
        gmask |= 1 << g
    members = []
    for i in range(m):
        inside = masks[i] & gmask
        if inside == 0 or inside & (inside - 1):
            raise InternalCheckError(
                f"image set {i} contains {bin(inside).count('1')} group "
                "elements instead of exactly one"
            )
        member = inside.bit_length() - 1
        # the unique group element is (word -> 1) -> 1
        expected = a.arrow[word_arrow(a, reps[i], a.unit)][a.unit]
        if member != expected:
            raise InternalCheckError(
                "group member of an image set differs from (word -> 1) -> 1"
            )
        members.append(member)
    monoid = WordMonoid(a, tuple(masks), tuple(reps),
                        tuple(tuple(row) for row in star), unit, tuple(members))
    _verify_word_monoid(monoid)
    return monoid


def _verify_word_monoid(monoid: WordMonoid):
    m, star, unit = monoid.m, monoid.star, monoid.unit
    for i in range(m):
        if star[unit][i] != i or star[i][unit] != i:
            raise InternalCheckError("monoid unit law fails")
    for i, j, k in itertools.product(range(m), repeat=3):
        if star[star[i][j]][k] != star[i][star[j][k]]:
            raise InternalCheckError("monoid associativity fails")
    for i, j in itertools.product(range(m), repeat=2):
        if monoid.leq(i, j):
            for k in range(m):
                if not monoid.leq(star[i][k], star[j][k]) or \
                        not monoid.leq(star[k][i], star[k][j]):
                    raise InternalCheckError("product is not order preserving")
    minimal = set(monoid.minimal_elements())
    singles = {i for i in range(m) if monoid.masks[i].bit_count() == 1}
    if minimal != singles:
        raise InternalCheckError(
            "minimal image sets are not exactly the singletons"
        )
    gp = group_part(monoid.algebra)
    if {monoid.group_member[i] for i in minimal} != gp:
        raise InternalCheckError(
            "singleton image sets do not cover the group part"
        )


class ResiduatedStructure:
    """A finite residuated po-monoid given by tables.

    Exposes ``arrow``/``squig`` aliases for the two residuals so the generic
    term and axiom machinery applies to the residuation reduct.
    """

    __slots__ = ("n", "names", "unit", "leq", "prod", "arrow", "squig",
                 "member_masks", "_flat")

    def __init__(self, names, unit, leq, prod, resl, resr, member_masks=None):
        self.n = len(names)
        self.names = tuple(names)
        self.unit = unit
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self.prod = tuple(tuple(row) for row in prod)
        self.arrow = tuple(tuple(row) for row in resl)
        self.squig = tuple(tuple(row) for row in resr)
        self.member_masks = tuple(member_masks) if member_masks else None
        self._flat = None

    @property
    def resl(self):
        return self.arrow

    @property
    def resr(self):
        return self.squig

    def flat_tables(self):
        if self._flat is None:
            from array import array

            flat = lambda t: array("i", [v for row in t for v in row])
            self._flat = (
                array("i", [1 if v else 0 for row in self.leq for v in row]),
                flat(self.prod), flat(self.arrow), flat(self.squig),
            )
        return self._flat

    def __repr__(self):
        return f"ResiduatedStructure(n={self.n})"


def build_filter_structure(monoid: WordMonoid) -> ResiduatedStructure:
    """Order-filters of the word po-monoid, as a residuated po-monoid.

    Hypotheses checked first: the unit is minimal, every element sits above
    exactly one minimal element, the minimal elements carry the group of the
    algebra's group part, and that group multiplication stays below the
    monoid product.
    """
    a = monoid.algebra
    m = monoid.m
    minimal = monoid.minimal_elements()
    if monoid.unit not in minimal:
        raise InternalCheckError("hypothesis failure: monoid unit not minimal")
    below = []
    for i in range(m):
        mins = [j for j in minimal if monoid.leq(j, i)]
        if len(mins) != 1:
            raise InternalCheckError(
                f"hypothesis failure: element {monoid.label(i)} sits above "
                f"{len(mins)} minimal elements"
            )
        below.append(mins[0])
    gv = group_view(a)
    pos = {g: i for i, g in enumerate(gv.elements)}
    single_of = {monoid.group_member[j]: j for j in minimal}
    for g in gv.elements:
        for h in gv.elements:
            ghe = gv.elements[gv.mult[pos[g]][pos[h]]]
            prod_index = monoid.star[single_of[g]][single_of[h]]
            if not monoid.masks[prod_index] >> ghe & 1:
                raise InternalCheckError(
                    "hypothesis failure: group product escapes the monoid "
                    f"product at ({a.names[g]}, {a.names[h]})"
                )

    up = [0] * m
    for i in range(m):
        for j in range(m):
            if monoid.leq(i, j):
                up[i] |= 1 << j

    # enumerate nonempty up-sets of each stratum (elements above one minimal)
    members = []
    for bottom in sorted(minimal):
        stratum = [i for i in range(m) if monoid.leq(bottom, i)]
        # decide elements with all their successors first
        stratum.sort(key=lambda i: bin(up[i]).count("1"))
        stratum_mask = 0
        for i in stratum:
            stratum_mask |= 1 << i
        chosen = []

        def walk(k, mask):
            if k == len(stratum):
                if mask:
                    chosen.append(mask)
                return
            e = stratum[k]
            walk(k + 1, mask)
            if (up[e] & ~(mask | (1 << e)) & stratum_mask) == 0:
                walk(k + 1, mask | (1 << e))

        walk(0, 0)
        members.extend(chosen)
    members = sorted(set(members),
                     key=lambda mask: (bin(mask).count("1"),
                                       sorted(_bits(mask))))
    index = {mask: i for i, mask in enumerate(members)}
    size = len(members)

    def prod_mask(xmask, ymask):
        out = 0
        for i in _bits(xmask):
            row = monoid.star[i]
            for j in _bits(ymask):
                out |= up[row[j]]
        return out

    prod = [[0] * size for _ in range(size)]
    for xi, xmask in enumerate(members):
        for yi, ymask in enumerate(members):
            out = prod_mask(xmask, ymask)
            try:
                prod[xi][yi] = index[out]
            except KeyError:
                raise InternalCheckError(
                    "order-filter product escaped the family"
                ) from None

    # residuals: X -> Y collects a with [a) . X <= Y; X ~> Y symmetrically
    left_of = [[prod_mask(up[aa], xmask) for xmask in members] for aa in range(m)]
    right_of = [[prod_mask(xmask, up[aa]) for xmask in members] for aa in range(m)]
    resl = [[0] * size for _ in range(size)]
    resr = [[0] * size for _ in range(size)]
    for xi, xmask in enumerate(members):
        for yi, ymask in enumerate(members):
            lmask = 0
            rmask = 0
            for aa in range(m):
                if left_of[aa][xi] & ~ymask == 0:
                    lmask |= 1 << aa
                if right_of[aa][xi] & ~ymask == 0:
                    rmask |= 1 << aa
            for table, mask in ((resl, lmask), (resr, rmask)):
                try:
                    table[xi][yi] = index[mask]
                except KeyError:
                    raise InternalCheckError(
                        "residual escaped the order-filter family"
                    ) from None

    leq = [[members[x] | members[y] == members[y] for y in range(size)]
           for x in range(size)]
    labels = ["{" + ",".join(monoid.label(i) for i in _bits(mask)) + "}"
              for mask in members]
    return ResiduatedStructure(labels, index[up[monoid.unit]], leq, prod,
                               resl, resr, member_masks=members)


def check_residuated_pomonoid(r: ResiduatedStructure,
                              max_violations: int = 10) -> VerificationReport:
    """Verify a residuated po-monoid exhaustively.

    Two routes are taken: the direct one (monoid laws, order compatibility
    and the residuation law for every triple) and the axiomatic one (the
    composition/unit identities, antisymmetry, the currying identities and
    semi-integrality).  Everything lands in one report.
    """
    n = r.n
    names = r.names

    def monoid_unit():
        for x in range(n):
            if r.prod[r.unit][x] != x or r.prod[x][r.unit] != x:
                yield (x,)

    def monoid_associativity():
        for x, y, z in itertools.product(range(n), repeat=3):
            if r.prod[r.prod[x][y]][z] != r.prod[x][r.prod[y][z]]:
                yield (x, y, z)

    def order_poset():
        for x in range(n):
            if not r.leq[x][x]:
                yield (x, x, x)
        for x, y in itertools.product(range(n), repeat=2):
            if x != y and r.leq[x][y] and r.leq[y][x]:
                yield (x, y, y)
        for x, y, z in itertools.product(range(n), repeat=3):
            if r.leq[x][y] and r.leq[y][z] and not r.leq[x][z]:
                yield (x, y, z)

    def product_monotone():
        for x, y in itertools.product(range(n), repeat=2):
            if not r.leq[x][y]:
                continue
            for z in range(n):
                if not r.leq[r.prod[x][z]][r.prod[y][z]]:
                    yield (x, y, z)
                if not r.leq[r.prod[z][x]][r.prod[z][y]]:
                    yield (x, y, z)

    def residuation_law():
        for x, y, z in itertools.product(range(n), repeat=3):
            if r.leq[x][r.arrow[y][z]] != r.leq[r.prod[x][y]][z]:
                yield (x, y, z)
            if r.leq[x][r.squig[y][z]] != r.leq[r.prod[y][x]][z]:
                yield (x, y, z)

    def curry_arrow():
        for x, y, z in itertools.product(range(n), repeat=3):
            if r.arrow[r.prod[x][y]][z] != r.arrow[x][r.arrow[y][z]]:
                yield (x, y, z)

    def curry_squig():
        for x, y, z in itertools.product(range(n), repeat=3):
            if r.squig[r.prod[x][y]][z] != r.squig[y][r.squig[x][z]]:
                yield (x, y, z)

    def semi_integral():
        for x in range(n):
            if x != r.unit and r.leq[r.unit][x]:
                yield (x,)

    checkers = [
        ("monoid-unit", monoid_unit),
        ("monoid-associativity", monoid_associativity),
        ("order-poset", order_poset),
        ("product-monotone", product_monotone),
        ("residuation-law", residuation_law),
        ("curry-arrow", curry_arrow),
        ("curry-squig", curry_squig),
        ("semi-integral", semi_integral),
    ] + _axiom_checkers(r)

    leq, prod, resl, resr = r.flat_tables()
    fast = (
        kernels.residuation_ok(leq, prod, resl, resr, n)
        and kernels.rpom3_ok(prod, resl, n)
        and kernels.pbci_ok(resl, resr, n, r.unit)
    )
    report = _run_checkers(r, checkers, max_violations)
    if fast != report.passed and report.passed:
        raise InternalCheckError("kernel and direct verification disagree")
    return report


def is_integral(r: ResiduatedStructure) -> bool:
    """Unit greatest (rather than just maximal)."""
    return all(r.leq[x][r.unit] for x in range(r.n))


@dataclass(frozen=True)
class EmbeddingReport:
    monoid: WordMonoid
    structure: ResiduatedStructure
    mapping: tuple[int, ...]
    verification: VerificationReport


def embed(a: Algebra, cap: int = WORD_MONOID_CAP) -> EmbeddingReport:
    """Build the embedding x |-> {J(word) : x in J(word)} and verify it.

    The verification checks injectivity, unit preservation and preservation
    of both arrows into the residuation reduct; the image is then a
    subalgebra isomorphic to the input.
    """
    monoid = build_word_monoid(a, cap=cap)
    structure = build_filter_structure(monoid)
    index = {mask: i for i, mask in enumerate(structure.member_masks)}
    mapping = []
    for x in range(a.n):
        mask = 0
        for i in range(monoid.m):
            if monoid.masks[i] >> x & 1:
                mask |= 1 << i
        try:
            mapping.append(index[mask])
        except KeyError:
            raise InternalCheckError(
                f"image of {a.names[x]} is not an order filter in the family"
            ) from None

    violations = []
    if len(set(mapping)) != a.n:
        violations.append(Violation("injective", ()))
    if mapping[a.unit] != structure.unit:
        violations.append(Violation("unit-preserved", (a.names[a.unit],)))
    for x, y in itertools.product(range(a.n), repeat=2):
        if mapping[a.arrow[x][y]] != structure.arrow[mapping[x]][mapping[y]]:
            violations.append(
                Violation("arrow-preserved", (a.names[x], a.names[y]))
            )
            break
    for x, y in itertools.product(range(a.n), repeat=2):
        if mapping[a.squig[x][y]] != structure.squig[mapping[x]][mapping[y]]:
            violations.append(
                Violation("squig-preserved", (a.names[x], a.names[y]))
            )
            break
    checked = ("injective", "unit-preserved", "arrow-preserved",
               "squig-preserved")
    report = _make_report(violations, checked, 10)
    return EmbeddingReport(monoid, structure, tuple(mapping), report)
