import pytest

from octogroup import golden as gold
from octogroup import catalog
from octogroup.scalars import Cyclotomic


def test_load_golden_table():
    table = gold.load_golden_table(gold.DATA_DIR / "chartab_1344.txt")
    assert table.order == 1344
    assert table.names == ["2^3.PSL2(7)", "2^3:PSL2(7)"]
    assert len(table.sizes) == 11
    assert sum(table.sizes) == 1344
    assert table.orders["2^3.PSL2(7)"][9:] == [8, 8]
    assert table.orders["2^3:PSL2(7)"][9:] == [4, 4]
    assert table.labels[0] == "1"
    assert not table.flags


def test_flagged_cells_parsed():
    table = gold.load_golden_table(gold.DATA_DIR / "chartab_2_3_s4.txt")
    assert len(table.flags) == 1
    flag = table.flags[0]
    assert flag.row_label == "2" and flag.printed == "3" and flag.corrected == "2"
    psl = gold.load_golden_table(gold.DATA_DIR / "chartab_psl2_7.txt")
    assert len(psl.flags) == 2
    assert all(f.row_label is None and f.printed == "42" and f.corrected == "24"
               for f in psl.flags)
    assert psl.sizes[4:] == [24, 24]


def test_symbol_expansion():
    table = gold.load_golden_table(gold.DATA_DIR / "chartab_7_3.txt")
    eta = Cyclotomic.root(1, 7) + Cyclotomic.root(2, 7) + Cyclotomic.root(4, 7)
    assert table.values[3][3] == eta
    assert table.values[3][4] == eta.conjugate()
    assert table.values[1][1] == Cyclotomic.root(1, 3)


def test_corrupt_file_errors(tmp_path):
    bad = tmp_path / "chartab_7_3.txt"
    bad.write_text("group 7:3\norder 21\nsizes 1 2 3\n")
    with pytest.raises(gold.GoldenFileError):
        gold.load_golden_table(bad)
    missing = tmp_path / "nothing.txt"
    with pytest.raises(gold.GoldenFileError):
        gold.load_golden_table(missing)
    garbled = tmp_path / "garbled.txt"
    garbled.write_text("group g\norder 5\nsizes 1 4\norders g 1 2\n"
                       "irrep 1 1 banana\n")
    with pytest.raises(gold.GoldenFileError):
        gold.load_golden_table(garbled)


def test_alignment_found_for_every_roster_table():
    for name, entry in catalog.ROSTER.items():
        if entry.golden_file is None:
            continue
        cands = catalog._alignment_candidates(name, None)
        assert cands, f"no alignment for {name}"


def test_alignment_maps_are_bijective():
    a = catalog.alignment("2^3.PSL2(7)")
    assert sorted(a.label_to_row.values()) == list(range(11))
    assert sorted(a.col_to_class) == list(range(11))
    assert set(a.label_to_row) == set(a.golden.labels)


def test_product_line_parsing():
    lines = gold.load_tensor_lines(gold.DATA_DIR / "tensors_1344.txt")
    by_raw = {(l.left, l.right, l.flagged): l for l in lines}
    plain = by_raw[("3_1", "3_1", False)]
    assert plain.terms == (("3_2", 1), ("6", 1))
    flagged = [l for l in lines if l.flagged]
    assert len(flagged) == 3
    multi = next(l for l in lines if l.left == "6" and l.right == "6")
    assert dict(multi.terms) == {"1": 1, "6": 2, "7_2": 1, "8": 2}


def test_branch_line_parsing():
    lines = gold.load_branch_lines(gold.DATA_DIR / "branch_psl2_7_to_7_3.txt")
    assert len(lines) == 6
    assert lines[-1].parent == "8"
    assert dict(lines[-1].terms) == {"1_1": 1, "1_2": 1, "3_1": 1, "3_2": 1}


def test_render_terms():
    order = ["1", "3_1", "3_2", "6"]
    assert gold.render_terms((("6", 2), ("1", 1)), order) == "1 + 2(6)"
