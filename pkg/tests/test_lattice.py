import pytest

from pbci.core import CapExceededError
from pbci.filters import all_filters, all_prefilters
from pbci.lattice import (
    FiniteLattice,
    counterexample_lattices,
    from_closed_family,
    is_arguesian,
    is_distributive,
    is_modular,
    is_sublattice,
)


def chain_lattice(m):
    return FiniteLattice(
        tuple(str(i) for i in range(m)),
        [[x <= y for y in range(m)] for x in range(m)],
    )


def test_from_closed_family_two_chain(ex6):
    fam = [frozenset({ex6.unit}), frozenset(range(ex6.n))]
    lat = from_closed_family(fam)
    assert lat.m == 2
    assert lat.join[0][1] == 1
    assert lat.meet[0][1] == 0


def test_from_closed_family_rejects_open_family():
    fam = [frozenset({0}), frozenset({1}), frozenset({0, 1})]
    with pytest.raises(ValueError):
        from_closed_family(fam)  # {0} & {1} == {} missing
    with pytest.raises(ValueError):
        from_closed_family([frozenset({0}), frozenset({1})])  # no top


def test_meet_is_intersection(ex6, d4):
    for a in (ex6, d4):
        fam = all_prefilters(a)
        lat = from_closed_family(fam)
        for x in range(lat.m):
            for y in range(lat.m):
                assert lat.sets[lat.meet[x][y]] == lat.sets[x] & lat.sets[y]


def test_chains_satisfy_everything():
    for m in (1, 2, 5):
        lat = chain_lattice(m)
        assert is_modular(lat)[0]
        assert is_distributive(lat)[0]
        assert is_arguesian(lat)[0]


def test_pentagon_and_diamond():
    n5, m3 = counterexample_lattices()
    ok, witness = is_modular(n5)
    assert not ok and witness is not None
    assert not is_arguesian(n5)[0]
    assert is_modular(m3)[0]
    assert not is_distributive(m3)[0]
    assert is_arguesian(m3)[0]


def test_d4_lattices(d4):
    pre = from_closed_family(all_prefilters(d4))
    fil = from_closed_family(all_filters(d4))
    assert pre.m == 10 and fil.m == 6
    ok, witness = is_modular(pre)
    assert not ok
    # the witness generates a pentagon: x < z incomparable to y
    x, y, z = witness
    assert not is_arguesian(pre)[0]
    assert is_modular(fil)[0]
    assert is_arguesian(fil)[0]
    assert is_sublattice(fil, pre)


def test_identity_implications(ex6, d4, chain2):
    lattices = [
        from_closed_family(all_filters(a)) for a in (ex6, d4, chain2)
    ] + [
        from_closed_family(all_prefilters(a)) for a in (ex6, d4, chain2)
    ] + list(counterexample_lattices())
    for lat in lattices:
        distributive = is_distributive(lat)[0]
        arguesian = is_arguesian(lat)[0]
        modular = is_modular(lat)[0]
        if distributive:
            assert arguesian
        if arguesian:
            assert modular


def test_sublattice_trivial(ex6):
    fam = all_prefilters(ex6)
    pre = from_closed_family(fam)
    two = from_closed_family([frozenset({ex6.unit}), frozenset(range(ex6.n))])
    assert is_sublattice(two, pre)


def test_sublattice_element_mismatch(ex6, d4):
    fil_ex6 = from_closed_family(all_filters(ex6))
    pre_d4 = from_closed_family(all_prefilters(d4))
    with pytest.raises(ValueError):
        is_sublattice(fil_ex6, pre_d4)


def test_filters_form_sublattice_of_prefilters(small_suite):
    for a in small_suite:
        fil = from_closed_family(all_filters(a))
        pre = from_closed_family(all_prefilters(a))
        assert is_sublattice(fil, pre)


def test_arguesian_cap():
    lat = chain_lattice(5)
    with pytest.raises(CapExceededError):
        is_arguesian(lat, cap=4)


def test_witnesses_are_labels(d4):
    pre = from_closed_family(
        all_prefilters(d4),
        labels=[d4.subset_names(s) for s in all_prefilters(d4)],
    )
    ok, witness = is_modular(pre)
    assert not ok
    assert all(isinstance(w, str) and w.startswith("{") for w in witness)
