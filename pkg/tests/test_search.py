import itertools

import pytest

from pbci.core import (
    Algebra,
    CapExceededError,
    canonical_key,
    check_pseudo_bci,
    check_pseudo_bck,
    find_isomorphism,
)
from pbci.filters import all_prefilters
from pbci.lattice import from_closed_family, is_modular
from pbci.search import PREDICATES, SearchSpec, enumerate_models, find_counterexample
from pbci.structure import group_to_algebra, small_groups

from tests.oracles import naive_enumerate

#: model counts up to isomorphism; 1..3 are validated against the naive
#: full-scan oracle below, size 4 is a frozen regression baseline
EXPECTED_COUNTS = {1: 1, 2: 2, 3: 5, 4: 25}


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(0)
    with pytest.raises(ValueError):
        SearchSpec(2, cls="nope")
    with pytest.raises(KeyError):
        SearchSpec(2, predicate="nope")


def test_counts(models_by_size):
    for n, expected in EXPECTED_COUNTS.items():
        assert len(models_by_size[n]) == expected


def test_all_models_verified(models_by_size):
    for models in models_by_size.values():
        for a in models:
            assert check_pseudo_bci(a).passed


def test_enumeration_matches_naive_oracle():
    for n in (1, 2, 3):
        naive = naive_enumerate(n)
        names = ([chr(ord("a") + i) for i in range(n - 1)] + ["1"])
        naive_algebras = [Algebra(names, n - 1, arrow, squig)
                          for arrow, squig in naive]
        naive_keys = {canonical_key(a) for a in naive_algebras}
        ours = list(enumerate_models(SearchSpec(n)))
        assert len(ours) == len(naive_keys)
        assert {canonical_key(a) for a in ours} == naive_keys
        # and every naive model is isomorphic to an emitted one
        for b in naive_algebras[:: max(1, len(naive_algebras) // 5)]:
            assert any(find_isomorphism(b, a) for a in ours)


def test_n2_models_are_chain_and_group(models_by_size, chain2, z2):
    models = models_by_size[2]
    assert len(models) == 2
    matched = {id(chain2): False, id(z2): False}
    for a in models:
        for ref in (chain2, z2):
            if find_isomorphism(a, ref) is not None:
                matched[id(ref)] = True
    assert all(matched.values())


def test_enumeration_isomorphism_free(models_by_size):
    for n in (2, 3, 4):
        models = models_by_size[n]
        for a, b in itertools.combinations(models, 2):
            assert find_isomorphism(a, b) is None


def test_pbck_is_integral_substream(models_by_size):
    for n in (2, 3, 4):
        bck = list(enumerate_models(SearchSpec(n, cls="pbck")))
        expected = [a for a in models_by_size[n]
                    if check_pseudo_bck(a).passed]
        assert [a.arrow for a in bck] == [a.arrow for a in expected]
        assert all(check_pseudo_bck(a).passed for a in bck)


def test_determinism(models_by_size):
    again = list(enumerate_models(SearchSpec(3)))
    assert [(a.arrow, a.squig) for a in again] == \
        [(a.arrow, a.squig) for a in models_by_size[3]]


def test_limit():
    assert len(list(enumerate_models(SearchSpec(4, limit=3)))) == 3


def test_size_cap(monkeypatch):
    with pytest.raises(CapExceededError):
        list(enumerate_models(SearchSpec(9)))
    monkeypatch.setenv("PBCI_MAX_SIZE", "2")
    with pytest.raises(CapExceededError):
        list(enumerate_models(SearchSpec(3)))
    monkeypatch.setenv("PBCI_MAX_SIZE", "9")
    assert len(list(enumerate_models(SearchSpec(2)))) == 2


# ---------------------------------------------------------------------------
# predicates


def test_find_counterexample_needs_predicate():
    with pytest.raises(ValueError):
        find_counterexample(SearchSpec(2))


def test_dot_neq_star_found_at_2():
    hit = find_counterexample(SearchSpec(2, predicate="dot-neq-star-bci"))
    assert hit is not None
    assert hit.arrow == hit.squig


def test_pbck_filter_lattice_distributive_no_counterexample():
    for n in (2, 3, 4):
        assert find_counterexample(
            SearchSpec(n, predicate="pbck-filter-lattice-nondistributive")
        ) is None


def test_g_not_filter_small_sizes(models_by_size, ex6):
    # recorded: non-filter group parts appear from size 3 on
    from pbci.filters import is_filter
    from pbci.structure import group_part

    counts = {}
    for n in (2, 3, 4):
        counts[n] = sum(1 for a in models_by_size[n]
                        if not is_filter(a, group_part(a)))
    assert counts == {2: 0, 3: 1, 4: 5}
    assert not is_filter(ex6, group_part(ex6))
    hit = find_counterexample(SearchSpec(3, predicate="g-not-filter"))
    assert hit is not None


def test_bundled_example_profile_is_size_minimal(models_by_size, ex6):
    # the sharp profile (all six associativity conditions hold while the
    # arrows disagree on group x integral pairs) has no witness below 6
    from pbci.decomposition import associativity_conditions, check_arrow_agreement

    def sharp(a):
        return all(associativity_conditions(a).values()) and \
            not check_arrow_agreement(a)[0]

    for n in (2, 3, 4):
        assert not any(sharp(a) for a in models_by_size[n])
    assert sharp(ex6)


@pytest.mark.slow
def test_no_sharp_profile_at_size_5():
    from pbci.decomposition import associativity_conditions, check_arrow_agreement

    for a in enumerate_models(SearchSpec(5)):
        assert not (all(associativity_conditions(a).values())
                    and not check_arrow_agreement(a)[0])


def test_proper_pseudo_predicate(models_by_size):
    hit = find_counterexample(SearchSpec(4, predicate="proper-pseudo"))
    assert hit is not None and hit.arrow != hit.squig
    assert find_counterexample(SearchSpec(3, predicate="proper-pseudo")) is None


def test_prefilter_nonmodular_on_order8_groups():
    # restricted to group-derived algebras, order 8: the dihedral group is
    # the only witness (its subgroup lattice contains a pentagon)
    hits = []
    for label, table in small_groups(8):
        a = group_to_algebra(table)
        if PREDICATES["prefilter-lattice-nonmodular"](a):
            hits.append(label)
    assert hits == ["D4"]


def test_prefilter_modular_at_small_sizes(models_by_size):
    for a in models_by_size[3]:
        lat = from_closed_family(all_prefilters(a))
        assert is_modular(lat)[0]
