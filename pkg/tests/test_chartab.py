from fractions import Fraction

import pytest

from octogroup.chartab import (
    branch,
    class_algebra,
    decompose,
    dixon_prime,
    frobenius_schur,
    inner_product,
    natural_character,
    tensor_decompose,
)
from octogroup.scalars import Cyclotomic
from octogroup import catalog


def trivial_index(table):
    return next(i for i, row in enumerate(table.rows)
                if all(v.is_rational() and v.rational_value() == 1 for v in row.values))


def test_dixon_prime_selection():
    # 337 = 2*168 + 1 is prime and exceeds 2*floor(sqrt(1344)) = 72
    assert dixon_prime(168, 1344) == 337
    assert dixon_prime(21, 21) == 43
    assert dixon_prime(84, 168) == 337
    assert dixon_prime(24, 192) == 73


def test_class_algebra_counts():
    g21 = catalog.build("7:3")
    algebra = class_algebra(g21)
    classes = g21.classes
    ident = 0
    for j in range(len(classes)):
        # identity class row: C_1 * C_j = C_j
        for k in range(len(classes)):
            assert algebra.a(ident, j, k) == (1 if j == k else 0)
    # the two size-3 classes of order-7 elements multiply with total weight 9
    sevens = [i for i, c in enumerate(classes) if c.element_order == 7]
    i, j = sevens
    total = sum(algebra.a(i, j, k) * classes[k].size for k in range(len(classes)))
    assert total == classes[i].size * classes[j].size == 9
    # weight identity for all pairs
    for i in range(len(classes)):
        for j in range(len(classes)):
            assert sum(algebra.a(i, j, k) * classes[k].size
                       for k in range(len(classes))) == classes[i].size * classes[j].size


def test_degrees():
    assert sorted(catalog.table("7:3").degrees()) == [1, 1, 1, 3, 3]
    assert sorted(catalog.table("2^3:7:3").degrees()) == [1, 1, 1, 3, 3, 7, 7, 7]
    t = catalog.table("2^3.PSL2(7)")
    assert sorted(t.degrees()) == [1, 3, 3, 6, 7, 7, 7, 8, 14, 21, 21]
    assert sum(d * d for d in t.degrees()) == 1344
    assert sorted(catalog.table("PSL2(7)").degrees()) == [1, 3, 3, 6, 7, 8]


def test_orthogonality_externally():
    table = catalog.table("2^3.S4")
    group = table.group
    for i, chi in enumerate(table.rows):
        for j, psi in enumerate(table.rows):
            assert inner_product(chi, psi, group) == (1 if i == j else 0)


def test_natural_characters():
    g21 = catalog.build("7:3")
    nat = natural_character(g21)
    assert nat.values[0].rational_value() == 7
    t = catalog.table("7:3")
    triv = trivial_index(t)
    assert inner_product(nat, t.rows[triv], g21) == 1
    mults = decompose(nat, t)
    assert sorted(t.rows[i].degree for i, m in enumerate(mults) for _ in range(m)) \
        == [1, 3, 3]

    g168 = catalog.build("2^3:7:3")
    assert inner_product(natural_character(g168), natural_character(g168), g168) == 1

    psl = catalog.build("PSL2(7)")
    natp = natural_character(psl)
    assert inner_product(natp, natp, psl) == 2  # 7 = 1 + 6

    non = catalog.build("2^3.PSL2(7)")
    assert inner_product(natural_character(non), natural_character(non), non) == 1


def test_tensor_examples():
    t = catalog.table("2^3.PSL2(7)")
    a = catalog.alignment("2^3.PSL2(7)")
    i3, j3 = a.irrep_index("3_1"), a.irrep_index("3_1")
    mults = tensor_decompose(t, i3, j3)
    labels = {a.row_to_label[k]: m for k, m in enumerate(mults) if m}
    assert labels == {"3_2": 1, "6": 1}
    i7 = a.irrep_index("7_1")
    labels = {a.row_to_label[k]: m
              for k, m in enumerate(tensor_decompose(t, i7, i7)) if m}
    assert labels == {"1": 1, "6": 1, "7_1": 1, "14": 1, "21_1": 1}
    triv = trivial_index(t)
    for j in range(len(t.rows)):
        mults = tensor_decompose(t, triv, j)
        assert mults == [1 if k == j else 0 for k in range(len(t.rows))]


def test_tensor_dimension_conservation():
    t = catalog.table("4.S4:2")
    for i in range(len(t.rows)):
        for j in range(len(t.rows)):
            mults = tensor_decompose(t, i, j)
            assert sum(m * t.rows[k].degree for k, m in enumerate(mults)) == \
                t.rows[i].degree * t.rows[j].degree


def test_branch_examples():
    tg = catalog.table("2^3.PSL2(7)")
    th = catalog.table("2^3:7:3")
    matrix = branch(tg, th)
    ag = catalog.alignment("2^3.PSL2(7)")
    ah = catalog.alignment("2^3:7:3")
    row8 = matrix[ag.irrep_index("8")]
    labels8 = {ah.row_to_label[k]: m for k, m in enumerate(row8) if m}
    assert labels8 == {"1_1": 1, "1_2": 1, "3_1": 1, "3_2": 1}
    row14 = matrix[ag.irrep_index("14")]
    labels14 = {ah.row_to_label[k]: m for k, m in enumerate(row14) if m}
    assert labels14 == {"7_2": 1, "7_3": 1}
    # the trivial irrep restricts to the trivial irrep
    trivial_parent = trivial_index(tg)
    trivial_child = trivial_index(th)
    assert matrix[trivial_parent] == [1 if k == trivial_child else 0
                                      for k in range(len(th.rows))]
    # dimension conservation
    for i, row in enumerate(matrix):
        assert sum(m * th.rows[k].degree for k, m in enumerate(row)) == tg.rows[i].degree


def test_branch_transitivity():
    # restriction 1344 -> 2^3:7:3 -> 7:3 equals the direct restriction to 7:3
    tg = catalog.table("2^3.PSL2(7)")
    tm = catalog.table("2^3:7:3")
    th = catalog.table("7:3")
    gm = branch(tg, tm)
    mh = branch(tm, th)
    gh = branch(tg, th)
    n_mid, n_low = len(tm.rows), len(th.rows)
    for i in range(len(tg.rows)):
        composed = [sum(gm[i][t] * mh[t][k] for t in range(n_mid)) for k in range(n_low)]
        assert composed == gh[i]


def test_branch_requires_subgroup():
    with pytest.raises(ValueError):
        branch(catalog.table("2^3.PSL2(7)"), catalog.table("PSL2(7)"))


def test_frobenius_schur():
    for name in ("2^3.PSL2(7)", "2^3:PSL2(7)"):
        t = catalog.table(name)
        a = catalog.alignment(name)
        inds = {a.row_to_label[i]: frobenius_schur(t, i) for i in range(len(t.rows))}
        assert inds["3_1"] == inds["3_2"] == 0
        assert all(v == 1 for lab, v in inds.items() if lab not in ("3_1", "3_2"))
        # sum of indicators weighted by degree counts involutions plus identity
        group = t.group
        involutions = sum(c.size for c in group.classes if c.element_order == 2)
        assert sum(frobenius_schur(t, i) * t.rows[i].degree
                   for i in range(len(t.rows))) == involutions + 1


def test_value_conductors_divide_element_orders():
    t = catalog.table("2^3:7:3")
    for row in t.rows:
        for k, v in enumerate(row.values):
            assert t.classes[k].element_order % v.conductor == 0


def test_inner_product_rationality():
    g = catalog.build("7:3")
    t = catalog.table("7:3")
    assert inner_product(t.rows[0], t.rows[0], g) == Fraction(1)
