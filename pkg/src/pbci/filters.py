"""Prefilters, filters, generated closures, ideal terms and the
filter/congruence correspondence.

A prefilter contains the unit, is closed under modus ponens and closed under
x |-> x -> 1.  A filter is a prefilter that treats the two arrows alike
(a -> b lands inside iff a ~> b does); filters are exactly the kernels of
relative congruences.
"""

from __future__ import annotations

import itertools

from pbci.core import (
    Algebra,
    InternalCheckError,
    Violation,
    arrow_t,
    parse_term,
    squig_t,
    var,
)

SUBSET_SCAN_LIMIT = 20

#: Basis of ideal terms: a nonempty subset containing the unit is a filter
#: iff it is closed under these terms with arbitrary x-arguments.
IDEAL_TERMS = {
    "t1": ((("x",), ("y1", "y2")), parse_term("(y1 -> (y2 -> x)) -> x")),
    "t2": ((("x",), ("y",)), parse_term("(y ~> x) ~> x")),
    "t3": (((), ("y",)), parse_term("y -> 1")),
    "w": ((("x1", "x2"), ("y1", "y2")),
          squig_t(squig_t(arrow_t(arrow_t(var("y1"),
                                          arrow_t(var("y2"), var("x1"))),
                                  var("x1")),
                          var("x2")),
                  var("x2"))),
}


def ideal_term_eval(a: Algebra, term_name: str, args) -> int:
    """Evaluate one of the basis ideal terms on concrete elements.

    ``args`` lists the x-arguments followed by the y-arguments, in the order
    of the term signature.
    """
    try:
        (xs, ys), term = IDEAL_TERMS[term_name]
    except KeyError:
        raise KeyError(f"unknown ideal term {term_name!r}") from None
    variables = xs + ys
    if len(args) != len(variables):
        raise ValueError(
            f"{term_name} takes {len(variables)} arguments, got {len(args)}"
        )
    env = dict(zip(variables, args))
    from pbci.core import eval_term

    return eval_term(term, a, env)


# ---------------------------------------------------------------------------
# Membership checks


def check_prefilter(a: Algebra, subset):
    """None if ``subset`` is a prefilter, else the first violated condition.

    Conditions: unit membership; modus ponens; closure under x -> 1.  The
    modus-ponens route through the other arrow is evaluated as well and must
    give the same verdict.
    """
    subset = frozenset(subset)
    v_arrow = _prefilter_violation(a, subset, a.arrow)
    v_squig = _prefilter_violation(a, subset, a.squig)
    if (v_arrow is None) != (v_squig is None):
        raise InternalCheckError(
            "modus ponens via the two arrows disagrees on "
            f"{a.subset_names(subset)}"
        )
    return v_arrow


def _prefilter_violation(a, subset, table):
    u = a.unit
    if u not in subset:
        return Violation("unit-membership", (a.names[u],))
    for x in sorted(subset):
        for b in range(a.n):
            if table[x][b] in subset and b not in subset:
                return Violation(
                    "modus-ponens", (a.names[x], a.names[table[x][b]])
                )
    for x in sorted(subset):
        if a.arrow[x][u] not in subset:
            return Violation("unit-image-closure", (a.names[x],))
    return None


def is_prefilter(a: Algebra, subset) -> bool:
    return check_prefilter(a, subset) is None


def check_filter(a: Algebra, subset):
    """None if ``subset`` is a filter, else the first violation.

    Evaluated both as prefilter + arrow-agreement and as prefilter + the
    reflection condition ((b -> a) -> a and (b ~> a) ~> a land inside for
    members b); the two routes must agree.
    """
    subset = frozenset(subset)
    pre = check_prefilter(a, subset)
    via_agreement = pre or _arrow_agreement_violation(a, subset)
    via_reflection = pre or _reflection_violation(a, subset)
    if (via_agreement is None) != (via_reflection is None):
        raise InternalCheckError(
            "filter conditions (arrow-agreement vs reflection route) disagree "
            f"on {a.subset_names(subset)}"
        )
    return via_agreement


def _arrow_agreement_violation(a, subset):
    for x in range(a.n):
        for y in range(a.n):
            if (a.arrow[x][y] in subset) != (a.squig[x][y] in subset):
                return Violation("arrow-agreement", (a.names[x], a.names[y]))
    return None


def _reflection_violation(a, subset):
    for b in sorted(subset):
        for x in range(a.n):
            if a.arrow[a.arrow[b][x]][x] not in subset:
                return Violation("reflection-arrow", (a.names[b], a.names[x]))
            if a.squig[a.squig[b][x]][x] not in subset:
                return Violation("reflection-squig", (a.names[b], a.names[x]))
    return None


def is_filter(a: Algebra, subset) -> bool:
    return check_filter(a, subset) is None


# ---------------------------------------------------------------------------
# Generated closures


def prefilter_generated(a: Algebra, seed) -> frozenset:
    """Smallest prefilter containing ``seed`` (nonempty).

    Computed twice: by the word-reachability fixpoint (x belongs iff some
    word over seed + seed->1 sends x to the unit) and by naive closure under
    the three prefilter conditions.  The two must coincide.
    """
    seed = frozenset(seed)
    if not seed:
        raise ValueError("seed must be nonempty")
    via_words = _word_closure(a, seed)
    via_naive = _naive_prefilter_closure(a, seed)
    if via_words != via_naive:
        raise InternalCheckError(
            "word-reachability and naive prefilter closures disagree on "
            f"{a.subset_names(seed)}"
        )
    return via_words


def _word_closure(a, seed):
    u = a.unit
    letters = frozenset(seed) | {a.arrow[x][u] for x in seed}
    # single-letter words, then extend one letter at the right end:
    # x is reachable via a word ending in b iff b -> x is reachable
    reached = {x for x in range(a.n) if any(a.arrow[b][x] == u for b in letters)}
    changed = True
    while changed:
        changed = False
        for x in range(a.n):
            if x in reached:
                continue
            if any(a.arrow[b][x] in reached for b in letters):
                reached.add(x)
                changed = True
    return frozenset(reached)


def _naive_prefilter_closure(a, seed):
    u = a.unit
    out = set(seed)
    out.add(u)
    changed = True
    while changed:
        changed = False
        for x in list(out):
            y = a.arrow[x][u]
            if y not in out:
                out.add(y)
                changed = True
            for b in range(a.n):
                if a.arrow[x][b] in out and b not in out:
                    out.add(b)
                    changed = True
    return frozenset(out)


def filter_generated(a: Algebra, seed) -> frozenset:
    """Smallest filter containing ``seed``: closure under the ideal-term basis
    with arbitrary x-arguments."""
    seed = frozenset(seed)
    if not seed:
        raise ValueError("seed must be nonempty")
    arr, sq, u = a.arrow, a.squig, a.unit
    out = set(seed)
    out.add(u)
    changed = True
    while changed:
        changed = False
        members = list(out)
        for y in members:
            v = arr[y][u]
            if v not in out:
                out.add(v)
                changed = True
        for x in range(a.n):
            for y in members:
                v = sq[sq[y][x]][x]
                if v not in out:
                    out.add(v)
                    changed = True
                for y2 in members:
                    v = arr[arr[y][arr[y2][x]]][x]
                    if v not in out:
                        out.add(v)
                        changed = True
    return frozenset(out)


# ---------------------------------------------------------------------------
# Families


def _canonical_family(family):
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def _all_closed_subsets(a, is_member, generate, cap):
    if a.n <= cap:
        out = []
        rest = [x for x in range(a.n) if x != a.unit]
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                subset = frozenset(combo) | {a.unit}
                if is_member(a, subset):
                    out.append(subset)
        return _canonical_family(out)
    # closure-generated enumeration for large carriers
    bottom = generate(a, {a.unit})
    family = {bottom}
    queue = [bottom]
    while queue:
        current = queue.pop()
        for x in range(a.n):
            if x in current:
                continue
            bigger = generate(a, current | {x})
            if bigger not in family:
                family.add(bigger)
                queue.append(bigger)
    return _canonical_family(family)


def all_prefilters(a: Algebra, cap: int = SUBSET_SCAN_LIMIT):
    """Every prefilter, sorted by size then membership."""
    return _all_closed_subsets(a, is_prefilter, prefilter_generated, cap)


def all_filters(a: Algebra, cap: int = SUBSET_SCAN_LIMIT):
    """Every filter, sorted by size then membership."""
    return _all_closed_subsets(a, is_filter, filter_generated, cap)


# ---------------------------------------------------------------------------
# Filter <-> congruence correspondence


def theta_from_filter(a: Algebra, subset):
    """The relative congruence with kernel ``subset``.

    Related pairs: a -> b and b -> a both in the filter.  The result is
    returned as a :class:`pbci.congruences.Partition`; membership of the
    input in the filter family is enforced.
    """
    from pbci.congruences import Partition

    subset = frozenset(subset)
    bad = check_filter(a, subset)
    if bad is not None:
        raise ValueError(f"not a filter: {bad}")
    # the relation is transitive for a filter; union-find guards the build
    parent = list(range(a.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(a.n):
        for y in range(x + 1, a.n):
            if a.arrow[x][y] in subset and a.arrow[y][x] in subset:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    theta = Partition.from_parent(a.n, [find(x) for x in range(a.n)])
    # sanity: the block relation must not exceed the defining relation
    for x in range(a.n):
        for y in range(a.n):
            direct = a.arrow[x][y] in subset and a.arrow[y][x] in subset
            if (theta.block_id[x] == theta.block_id[y]) != direct:
                raise InternalCheckError(
                    "filter relation is not transitive at "
                    f"({a.names[x]}, {a.names[y]})"
                )
    if kernel(a, theta) != subset:
        raise InternalCheckError("kernel of theta_F differs from F")
    return theta


def kernel(a: Algebra, theta) -> frozenset:
    """The block of the unit."""
    uid = theta.block_id[a.unit]
    return frozenset(x for x in range(a.n) if theta.block_id[x] == uid)
