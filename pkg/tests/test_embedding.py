import itertools

import pytest

from pbci.core import CapExceededError, check_pseudo_bck, derive_order
from pbci.embedding import (
    ResiduatedStructure,
    build_filter_structure,
    build_word_monoid,
    check_residuated_pomonoid,
    embed,
    is_integral,
)
from pbci.structure import group_part, group_view


def test_one_element_monoid(one):
    monoid = build_word_monoid(one)
    assert monoid.m == 1
    structure = build_filter_structure(monoid)
    assert structure.n == 1
    assert check_residuated_pomonoid(structure).passed
    assert is_integral(structure)


def test_group_algebra_monoid_is_group_of_singletons(d4, z3):
    for a in (d4, z3):
        monoid = build_word_monoid(a)
        assert monoid.m == a.n
        assert all(mask.bit_count() == 1 for mask in monoid.masks)
        # the monoid product mirrors the group: J(v)*J(w) == {value}
        gv = group_view(a)
        pos = {g: i for i, g in enumerate(gv.elements)}
        for i in range(monoid.m):
            for j in range(monoid.m):
                gi = monoid.group_member[i]
                gj = monoid.group_member[j]
                prod = monoid.star[i][j]
                assert monoid.group_member[prod] == gv.elements[
                    gv.mult[pos[gi]][pos[gj]]]


def test_single_letter_images_are_up_sets(small_suite):
    for a in small_suite:
        order = derive_order(a)
        monoid = build_word_monoid(a)
        for x in range(a.n):
            expected = 0
            for y in order.up(x):
                expected |= 1 << y
            assert any(monoid.masks[i] == expected for i in range(monoid.m))
        # singletons {g} appear for group elements
        for g in group_part(a):
            assert (1 << g) in monoid.masks


def test_image_map_is_antitone_injection(small_suite):
    for a in small_suite:
        order = derive_order(a)
        monoid = build_word_monoid(a)
        index = {mask: i for i, mask in enumerate(monoid.masks)}

        def image(x):
            mask = 0
            for y in order.up(x):
                mask |= 1 << y
            return index[mask]

        for x, y in itertools.product(range(a.n), repeat=2):
            if x != y:
                assert image(x) != image(y)
            assert order.is_leq(x, y) == monoid.leq(image(y), image(x))


def test_ex6_monoid(ex6):
    monoid = build_word_monoid(ex6)
    assert monoid.m == 8
    gmask = sum(1 << g for g in group_part(ex6))
    for i in range(monoid.m):
        assert (monoid.masks[i] & gmask).bit_count() == 1
    assert monoid.star[monoid.unit] == tuple(range(monoid.m))


def test_monoid_associativity(small_suite):
    for a in small_suite:
        monoid = build_word_monoid(a)
        for i, j, k in itertools.product(range(monoid.m), repeat=3):
            assert monoid.star[monoid.star[i][j]][k] == \
                monoid.star[i][monoid.star[j][k]]


def test_cap_exceeded():
    from pbci.decomposition import builtin_example

    with pytest.raises(CapExceededError):
        build_word_monoid(builtin_example(), cap=3)


def test_ex6_structure_semi_integral_not_integral(ex6):
    rep = embed(ex6)
    assert rep.structure.n == 10
    report = check_residuated_pomonoid(rep.structure)
    assert report.passed
    assert not is_integral(rep.structure)


def test_bck_gives_integral(chain2):
    rep = embed(chain2)
    assert check_residuated_pomonoid(rep.structure).passed
    assert is_integral(rep.structure)


def test_integral_iff_bck(small_suite):
    for a in small_suite:
        rep = embed(a)
        assert is_integral(rep.structure) == check_pseudo_bck(a).passed


def test_embedding_verified(small_suite):
    for a in small_suite:
        rep = embed(a)
        assert rep.verification.passed
        assert check_residuated_pomonoid(rep.structure).passed


def test_embedding_image_is_closed(ex6):
    rep = embed(ex6)
    image = set(rep.mapping)
    s = rep.structure
    for x, y in itertools.product(rep.mapping, repeat=2):
        assert s.arrow[x][y] in image
        assert s.squig[x][y] in image


def test_mutated_product_fails():
    # break the product table of a valid structure and expect a witness
    labels = ["0", "1"]
    leq = [[True, True], [False, True]]
    prod = [[0, 0], [0, 1]]
    resl = [[1, 1], [0, 1]]
    resr = [[1, 1], [0, 1]]
    good = ResiduatedStructure(labels, 1, leq, prod, resl, resr)
    assert check_residuated_pomonoid(good).passed
    bad = ResiduatedStructure(labels, 1, leq, [[1, 0], [0, 1]], resl, resr)
    report = check_residuated_pomonoid(bad)
    assert not report.passed
    assert report.violations


def test_residuation_law_direct_scan(small_suite):
    # the law itself, triple by triple, against the tables
    for a in small_suite[-3:]:
        s = embed(a).structure
        for x, y, z in itertools.product(range(s.n), repeat=3):
            assert s.leq[x][s.arrow[y][z]] == s.leq[s.prod[x][y]][z]
            assert s.leq[x][s.squig[y][z]] == s.leq[s.prod[y][x]][z]
