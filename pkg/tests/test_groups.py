import random

import pytest

from octogroup.groups import (
    ClosureCapError,
    SubgroupError,
    are_conjugate_subgroups,
    close,
    find_complement,
    find_conjugating_element,
    is_normal,
    quotient,
    subgroup,
)
from octogroup.signedperm import SignedPerm, conjugate
from octogroup import catalog


def gen(*names):
    return [catalog.generator(n) for n in names]


def test_closure_orders():
    assert close(gen("alpha", "beta")).order == 21
    assert close(gen("alpha", "beta", "N1")).order == 168
    assert close(gen("alpha", "gamma")).order == 1344
    assert close(gen("gamma", "theta")).order == 192


def test_closure_cap():
    with pytest.raises(ClosureCapError):
        close(gen("alpha", "gamma"), cap=100)


def brute_force_classes(group):
    """Independent all-pairs conjugacy oracle."""
    elems = list(group.elements)
    seen = set()
    out = []
    for x in elems:
        if x in seen:
            continue
        orbit = {conjugate(x, g) for g in elems}
        seen |= orbit
        out.append((x.order(), len(orbit)))
    return sorted(out)


def test_classes_match_brute_force():
    g21 = catalog.build("7:3")
    assert sorted((c.element_order, c.size) for c in g21.classes) == \
        brute_force_classes(g21)
    g192 = catalog.build("2^3.S4")
    assert sorted((c.element_order, c.size) for c in g192.classes) == \
        brute_force_classes(g192)


def test_class_invariants():
    group = catalog.build("2^3:7:3")
    assert sum(c.size for c in group.classes) == group.order
    for c in group.classes:
        assert group.order % c.size == 0
        assert c.size * group.centralizer_order(c.representative) == group.order
        assert all(group.elements[i].order() == c.element_order
                   for i in c.member_indices)
    # identity is always a singleton class
    assert group.classes[0].size == 1
    assert group.classes[0].representative == group.identity


def test_class_count_1344():
    group = catalog.build("2^3.PSL2(7)")
    sizes = sorted(c.size for c in group.classes)
    assert len(sizes) == 11
    assert sizes == [1, 7, 42, 42, 84, 168, 168, 192, 192, 224, 224]


def test_power_maps():
    group = catalog.build("2^3:7:3")
    r = len(group.classes)
    assert group.power_map(1, verify=True) == tuple(range(r))
    pm2 = group.power_map(2, verify=True)
    for k, cls in enumerate(group.classes):
        if cls.element_order == 2:
            assert pm2[k] == 0


def test_order_histograms():
    non = catalog.build("2^3.PSL2(7)").order_histogram()
    spl = catalog.build("2^3:PSL2(7)").order_histogram()
    assert non.get(8, 0) == 336
    assert spl.get(8, 0) == 0


def test_subgroup_and_normality():
    parent = catalog.build("2^3.PSL2(7)")
    sub = subgroup(parent, gen("N1", "N2", "N7"))
    assert sub.order == 8
    assert is_normal(parent, sub)
    assert is_normal(parent, parent)
    g21 = catalog.build("7:3")
    assert is_normal(g21, subgroup(g21, gen("alpha")))
    with pytest.raises(SubgroupError):
        subgroup(g21, gen("theta"))


def test_quotient_diagonal_action():
    parent = close(gen("alpha", "beta", "gamma", "N1"))
    normal = subgroup(parent, gen("N1", "N2", "N7"))
    points = list(catalog.diagonal_involutions().values())
    q = quotient(parent, normal, points)
    assert q.order == 168
    assert catalog.generator("alpha_t") in q
    assert len(q.classes) == 6


def test_quotient_by_trivial():
    g21 = catalog.build("7:3")
    trivial = subgroup(g21, [g21.identity])
    q = quotient(g21, trivial)
    assert q.order == 21
    assert sorted(c.size for c in q.classes) == sorted(c.size for c in g21.classes)


def test_quotient_s4_relations():
    parent = catalog.build("2^3.S4")
    normal = subgroup(parent, gen("N1", "N2", "N7"))
    q = quotient(parent, normal, list(catalog.diagonal_involutions().values()))
    assert q.order == 24
    a = catalog.generator("A_t") * catalog.generator("B_t")
    b = catalog.generator("A_t").inverse()
    assert a in q and b in q
    assert a.order() == 4 and b.order() == 3 and (a * b).order() == 2


def test_quotient_requires_normality():
    g21 = catalog.build("7:3")
    h = subgroup(g21, gen("beta"))
    with pytest.raises(SubgroupError):
        quotient(g21, h)


def test_find_complement_cases():
    split = catalog.build("2^3:PSL2(7)")
    normal = subgroup(split, gen("N1", "N2", "N7"))
    found = find_complement(split, normal, "PSL2(7)")
    assert found is not None
    assert found.order == 168
    assert set(found.elements) & set(normal.elements) == {split.identity}

    non = catalog.build("2^3.PSL2(7)")
    normal2 = subgroup(non, gen("N1", "N2", "N7"))
    assert find_complement(non, normal2, "PSL2(7)") is None

    ab = catalog.build("2^3.S4")
    normal3 = subgroup(ab, gen("N1", "N2", "N7"))
    assert find_complement(ab, normal3, "S4") is None

    with pytest.raises(ValueError):
        find_complement(split, normal, "A5")


def test_conjugate_subgroups():
    parent = catalog.build("2^3:PSL2(7)")
    h1 = catalog.build("PSL2(7)")
    assert are_conjugate_subgroups(parent, h1, h1)
    rng = random.Random(12)
    g = parent.elements[rng.randrange(parent.order)]
    moved = close([conjugate(x, g) for x in h1.generators])
    finder = find_conjugating_element(parent, h1, moved)
    assert finder is not None
    assert {conjugate(x, finder) for x in h1.elements} == set(moved.elements)


def test_deterministic_construction():
    a = close(gen("alpha", "beta", "N1"))
    b = close(gen("alpha", "beta", "N1"))
    assert a.elements == b.elements
    assert [c.representative for c in a.classes] == [c.representative for c in b.classes]


def test_lagrange():
    parent = catalog.build("4.S4:2")
    sub = subgroup(parent, [parent.generators[0]])
    assert parent.order % sub.order == 0
