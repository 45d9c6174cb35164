import itertools

from pbci.core import (
    arrow_t,
    check_pseudo_bci,
    check_term_identity,
    find_isomorphism,
    parse_term,
    squig_t,
    substitute,
    var,
    UNIT,
)
from pbci.decomposition import (
    ASSOCIATIVITY_CONDITIONS,
    associativity_conditions,
    builtin_example,
    check_arrow_agreement,
    check_dot_star_laws,
    check_maximal_laws,
    decompose,
    dot,
    dot_table,
    star,
    star_table,
)
from pbci.filters import is_filter
from pbci.structure import (
    direct_product,
    group_part,
    integral_part,
    is_p_semisimple,
    restrict,
    union_construction,
)


def test_builtin_example_profile(ex6):
    a = builtin_example()
    assert a == ex6
    assert check_pseudo_bci(a).passed
    assert sorted(a.names[i] for i in integral_part(a)) == ["1", "a", "b"]
    assert sorted(a.names[i] for i in group_part(a)) == ["1", "g"]
    assert a.arrow != a.squig  # proper
    # both parts carry equal arrows (they are single-arrow algebras)
    for part in (integral_part(a), group_part(a)):
        sub = restrict(a, part)
        assert sub.arrow == sub.squig


def test_dot_star_values(ex6):
    e = ex6.element
    assert dot(ex6, e("g"), e("a")) == e("x")
    for x in range(ex6.n):
        assert dot(ex6, ex6.unit, x) == x
        assert star(ex6, x, ex6.unit) == x
        assert dot(ex6, x, ex6.arrow[x][ex6.unit]) == ex6.unit


def test_dot_star_laws(small_suite, one):
    for a in list(small_suite) + [one]:
        assert check_dot_star_laws(a).passed


def test_maximal_laws(small_suite, one):
    for a in list(small_suite) + [one]:
        assert check_maximal_laws(a).passed


def test_maximal_laws_reduce_to_group_identities(d4):
    assert check_maximal_laws(d4).passed


def test_associativity_conditions_ex6(ex6):
    verdicts = associativity_conditions(ex6)
    assert set(verdicts) == set(ASSOCIATIVITY_CONDITIONS)
    assert all(verdicts.values())


def test_associativity_conditions_group(d4, z3):
    for a in (d4, z3):
        assert all(associativity_conditions(a).values())


def test_associativity_conditions_union(chain2, z2):
    glued = union_construction(chain2, z2)
    verdicts = associativity_conditions(glued)
    assert len(set(verdicts.values())) == 1


def test_conditions_agree_across_suite(small_suite):
    for a in small_suite:
        verdicts = associativity_conditions(a)
        assert len(set(verdicts.values())) == 1


def test_arrow_agreement(ex6, chain2, z2):
    ok, witness = check_arrow_agreement(ex6)
    assert not ok
    assert witness == ("g", "a")
    e = ex6.element
    assert ex6.arrow[e("g")][e("a")] == e("y")
    assert ex6.squig[e("g")][e("a")] == e("x")
    assert check_arrow_agreement(direct_product(chain2, z2))[0]


def test_arrow_agreement_trivial_for_equal_arrows(models_by_size):
    for a in models_by_size[3] + models_by_size[4]:
        if a.arrow == a.squig:
            assert check_arrow_agreement(a)[0]


def test_decompose_ex6(ex6):
    report = decompose(ex6)
    assert all(report.conditions.values())
    assert not report.arrows_agree
    assert not report.g_is_filter
    assert not report.decomposable
    assert report.iso is None


def test_decompose_product(chain2, z2, one):
    prod = direct_product(chain2, z2)
    report = decompose(prod)
    assert report.decomposable
    assert report.iso is not None
    assert decompose(one).decomposable


def test_decompose_triad_over_suite(small_suite, chain2, z2, z3):
    extras = [
        direct_product(chain2, z2),
        union_construction(chain2, z2),
        union_construction(chain2, z3),
    ]
    for a in list(small_suite) + extras:
        report = decompose(a)
        conditions = all(report.conditions.values()) and report.arrows_agree
        assert report.g_is_filter == conditions
        assert report.decomposable == conditions
        assert (find_isomorphism(a, report.product) is not None) == conditions


def test_union_is_not_decomposable(chain2, z2):
    # gluing at the unit breaks associativity of the dot operation
    # (g . (g^-1 . b) == g . g^-1 == 1, while (g . g^-1) . b == b),
    # so the glued algebra is a second witness of non-decomposability
    glued = union_construction(chain2, z2)
    report = decompose(glued)
    assert not report.decomposable
    assert not report.g_is_filter
    assert not all(report.conditions.values())


# ---------------------------------------------------------------------------
# term reformulations of the decomposition conditions


def delta_term(t):
    return arrow_t(arrow_t(t, UNIT), UNIT)


def test_delta_identities_iff_g_filter(ex6, chain2, z2):
    t1 = parse_term("(y1 -> (y2 -> x)) -> x")
    lhs1 = delta_term(t1)
    rhs1 = substitute(t1, {"y1": delta_term(var("y1")),
                           "y2": delta_term(var("y2"))})
    t2 = parse_term("(y ~> x) ~> x")
    lhs2 = delta_term(t2)
    rhs2 = substitute(t2, {"y": delta_term(var("y"))})

    prod = direct_product(chain2, z2)
    for a, expected in ((ex6, False), (prod, True)):
        holds = (check_term_identity(a, lhs1, rhs1).passed
                 and check_term_identity(a, lhs2, rhs2).passed)
        assert holds == expected
        assert is_filter(a, group_part(a)) == expected


def test_agreement_identity_matches_condition(ex6, chain2, z2):
    dx = arrow_t(delta_term(var("x")), var("x"))
    lhs = arrow_t(delta_term(var("y")), dx)
    rhs = squig_t(delta_term(var("y")), dx)
    prod = direct_product(chain2, z2)
    for a in (ex6, prod):
        assert check_term_identity(a, lhs, rhs).passed == \
            check_arrow_agreement(a)[0]


# ---------------------------------------------------------------------------
# remark invariants


def test_dot_equals_star_iff_p_semisimple(small_suite):
    for a in small_suite:
        assert (dot_table(a) == star_table(a)) == is_p_semisimple(a)


def test_smallest_bci_with_distinct_dot_star(models_by_size):
    # recorded: the 2-chain already separates the two operations
    hits = [a for a in models_by_size[2]
            if a.arrow == a.squig and dot_table(a) != star_table(a)]
    assert hits


def test_swapped_mixed_law_forces_group(small_suite):
    # x * (y . z) == (x * y) . z only when the algebra is its group part
    for a in small_suite:
        holds = all(
            star(a, x, dot(a, y, z)) == dot(a, star(a, x, y), z)
            for x, y, z in itertools.product(range(a.n), repeat=3)
        )
        if holds:
            assert is_p_semisimple(a)
        if is_p_semisimple(a):
            assert holds
