"""Direct-product decomposition: the auxiliary operations x.y and x*y,
the six equivalent associativity conditions, the mixed-arrow agreement
condition, and the decomposition isomorphism.

A verified algebra is isomorphic to the product of its integral part and
(the dagger of) its group part exactly when the group part is a filter,
equivalently when the associativity conditions hold together with arrow
agreement on group x integral pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from pbci.core import (
    Algebra,
    InternalCheckError,
    VerificationReport,
    _run_checkers,
    find_isomorphism,
    parse_algebra,
)
from pbci.filters import check_filter
from pbci.structure import (
    direct_product,
    group_part,
    integral_part,
    restrict,
)


def dot(a: Algebra, x: int, y: int) -> int:
    """x.y == (x -> 1) ~> y."""
    return a.squig[a.arrow[x][a.unit]][y]


def star(a: Algebra, x: int, y: int) -> int:
    """x*y == (y ~> 1) -> x."""
    return a.arrow[a.squig[y][a.unit]][x]


def dot_table(a: Algebra):
    return tuple(tuple(dot(a, x, y) for y in range(a.n)) for x in range(a.n))


def star_table(a: Algebra):
    return tuple(tuple(star(a, x, y) for y in range(a.n)) for x in range(a.n))


def check_dot_star_laws(a: Algebra, max_violations: int = 10) -> VerificationReport:
    """The five laws tying the auxiliary operations to the unit and order."""
    n, u = a.n, a.unit
    arr, sq = a.arrow, a.squig

    def leq(x, y):
        return arr[x][y] == u

    def unit_laws():
        for x in range(n):
            if dot(a, u, x) != x or star(a, x, u) != x:
                yield (x,)

    def inverse_laws():
        for x in range(n):
            if dot(a, x, arr[x][u]) != u or star(a, sq[x][u], x) != u:
                yield (x,)

    def mixed_associativity():
        for x, y, z in itertools.product(range(n), repeat=3):
            if dot(a, x, star(a, y, z)) != star(a, dot(a, x, y), z):
                yield (x, y, z)

    def dot_half_associativity():
        for x, y, z in itertools.product(range(n), repeat=3):
            if not leq(dot(a, dot(a, x, y), z), dot(a, x, dot(a, y, z))):
                yield (x, y, z)

    def star_half_associativity():
        for x, y, z in itertools.product(range(n), repeat=3):
            if not leq(star(a, x, star(a, y, z)), star(a, star(a, x, y), z)):
                yield (x, y, z)

    return _run_checkers(a, [
        ("dot-star-unit", unit_laws),
        ("dot-star-inverse", inverse_laws),
        ("mixed-associativity", mixed_associativity),
        ("dot-half-associativity", dot_half_associativity),
        ("star-half-associativity", star_half_associativity),
    ], max_violations)


def check_maximal_laws(a: Algebra, max_violations: int = 10) -> VerificationReport:
    """Laws relating the arrows to maximal (group-part) elements."""
    n, u = a.n, a.unit
    arr, sq = a.arrow, a.squig
    gp = sorted(group_part(a))

    def inv(g):
        return arr[g][u]

    def arrow_into_group():
        for x in range(n):
            for g in gp:
                if arr[x][g] != arr[arr[g][x]][u]:
                    yield (x, g)
                if sq[x][g] != arr[sq[g][x]][u]:
                    yield (x, g)

    def arrow_from_group():
        for x in range(n):
            for g in gp:
                if arr[g][x] != star(a, x, inv(g)):
                    yield (x, g)
                if sq[g][x] != dot(a, inv(g), x):
                    yield (x, g)

    def image_of_arrow_into_group():
        for x in range(n):
            for g in gp:
                if arr[arr[x][g]][u] != dot(a, x, inv(g)):
                    yield (x, g)
                if arr[sq[x][g]][u] != star(a, inv(g), x):
                    yield (x, g)

    return _run_checkers(a, [
        ("arrow-into-group", arrow_into_group),
        ("arrow-from-group", arrow_from_group),
        ("image-of-arrow-into-group", image_of_arrow_into_group),
    ], max_violations)


ASSOCIATIVITY_CONDITIONS = (
    "dot-associative",
    "dot-group-associative",
    "squig-group-cancel",
    "star-associative",
    "star-group-associative",
    "arrow-group-cancel",
)


def associativity_conditions(a: Algebra) -> dict[str, bool]:
    """The six equivalent associativity conditions, each checked directly.

    They are provably equivalent for verified algebras, so any divergence
    raises :class:`InternalCheckError`.
    """
    n, u = a.n, a.unit
    arr, sq = a.arrow, a.squig
    gp = sorted(group_part(a))

    def inv(g):
        return arr[g][u]

    verdicts = {
        "dot-associative": all(
            dot(a, dot(a, x, y), z) == dot(a, x, dot(a, y, z))
            for x, y, z in itertools.product(range(n), repeat=3)
        ),
        "dot-group-associative": all(
            dot(a, dot(a, g, h), x) == dot(a, g, dot(a, h, x))
            for g in gp for h in gp for x in range(n)
        ),
        "squig-group-cancel": all(
            sq[inv(g)][sq[g][x]] == x for g in gp for x in range(n)
        ),
        "star-associative": all(
            star(a, x, star(a, y, z)) == star(a, star(a, x, y), z)
            for x, y, z in itertools.product(range(n), repeat=3)
        ),
        "star-group-associative": all(
            star(a, x, star(a, h, g)) == star(a, star(a, x, h), g)
            for g in gp for h in gp for x in range(n)
        ),
        "arrow-group-cancel": all(
            arr[inv(g)][arr[g][x]] == x for g in gp for x in range(n)
        ),
    }
    if len(set(verdicts.values())) > 1:
        raise InternalCheckError(
            f"the equivalent associativity conditions diverge: {verdicts}"
        )
    return verdicts


def check_arrow_agreement(a: Algebra):
    """Do the two arrows agree on (group part) x (integral part)?

    Returns (verdict, witness); the witness is the first (g, x) pair where
    g -> x differs from g ~> x.
    """
    gp = sorted(group_part(a))
    ip = sorted(integral_part(a))
    for g in gp:
        for x in ip:
            if a.arrow[g][x] != a.squig[g][x]:
                return False, (a.names[g], a.names[x])
    return True, None


@dataclass(frozen=True)
class DecompositionReport:
    conditions: dict
    arrows_agree: bool
    agreement_witness: tuple | None
    g_is_filter: bool
    filter_violation: object
    product: Algebra | None
    iso: tuple | None

    @property
    def decomposable(self) -> bool:
        return self.iso is not None


def decompose(a: Algebra) -> DecompositionReport:
    """Full decomposition diagnostic and, when possible, the isomorphism.

    All three equivalent characterizations are evaluated (even when an early
    one fails): the associativity conditions together with arrow agreement,
    the group part being a filter, and the existence of an isomorphism with
    the product of the integral part and the dagger of the group part.  Any
    pairwise disagreement raises :class:`InternalCheckError`.
    """
    conditions = associativity_conditions(a)
    agree, witness = check_arrow_agreement(a)
    violation = check_filter(a, group_part(a))
    g_is_filter = violation is None
    via_conditions = all(conditions.values()) and agree

    ipart = restrict(a, integral_part(a))
    gpart = restrict(a, group_part(a))
    product = direct_product(ipart, gpart.dagger())
    iso = None
    if via_conditions:
        iso = _eta_isomorphism(a, ipart, gpart, product)
    found = find_isomorphism(product, a)
    if via_conditions != g_is_filter or via_conditions != (found is not None):
        raise InternalCheckError(
            "decomposition characterizations disagree: "
            f"conditions={via_conditions} filter={g_is_filter} "
            f"search={'found' if found else 'absent'}"
        )
    return DecompositionReport(
        conditions=conditions,
        arrows_agree=agree,
        agreement_witness=witness,
        g_is_filter=g_is_filter,
        filter_violation=violation,
        product=product,
        iso=iso,
    )


def _eta_isomorphism(a, ipart, gpart, product):
    """(x, g) |-> g -> x from the product onto the algebra, verified."""
    imap = sorted(integral_part(a))
    gmap = sorted(group_part(a))
    eta = []
    for i in range(ipart.n):
        for j in range(gpart.n):
            eta.append(a.arrow[gmap[j]][imap[i]])
    if sorted(eta) != list(range(a.n)):
        raise InternalCheckError("eta is not a bijection")
    for p, q in itertools.product(range(product.n), repeat=2):
        if eta[product.arrow[p][q]] != a.arrow[eta[p]][eta[q]]:
            raise InternalCheckError("eta does not preserve the arrow")
        if eta[product.squig[p][q]] != a.squig[eta[p]][eta[q]]:
            raise InternalCheckError("eta does not preserve the squig")
    if eta[product.unit] != a.unit:
        raise InternalCheckError("eta does not preserve the unit")
    return tuple(eta)


_EXAMPLE6 = """\
# bundled 6-element algebra: a proper example whose group part is not a
# filter although all six associativity conditions hold
elements: a b x y g 1
unit: 1
arrow:
1 b g y g 1
a 1 x g g 1
g x 1 a 1 g
y g b 1 1 g
y x b a 1 g
a b x y g 1
squig:
1 b x g g 1
a 1 g y g 1
x g 1 b 1 g
g y a 1 1 g
x y a b 1 g
a b x y g 1
"""


def builtin_example() -> Algebra:
    """The bundled 6-element example with integral part {a, b, 1} and group
    part {g, 1}: associative in all six senses yet not decomposable."""
    return parse_algebra(_EXAMPLE6)


def builtin_example_text() -> str:
    return _EXAMPLE6
