"""Reference tables: file formats, loading, and alignment of computed tables.

File conventions
----------------

Character-table files: ``group``, ``order``, ``sizes`` and one ``orders``
line per group name, then one ``irrep <label> <cells...>`` line per row.
A cell may carry a known-misprint annotation ``printed!corrected``: the
corrected value participates in all comparisons and the cell is reported
as flagged.  Values are integers, rationals, ``z{n}^{k}`` expressions
(without spaces), or the symbols mu, mu_bar, eta, eta_bar (optionally
negated), which expand to z3, -1-z3, z7+z7^2+z7^4 and its conjugate.

Tensor files: lines ``<label> x <label> = <sum>``; a leading ``!`` flags a
suspected misprint (compared and reported, never fatal).  Branch files:
``<label> -> <sum>``.  Sums use ``+`` and optional multiplicities ``k(label)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path

from .chartab import CharacterTable, tensor_decompose
from .scalars import Cyclotomic

DATA_DIR = Path(__file__).parent / "data"

_SYMBOLS = {
    "mu": "z3",
    "mu_bar": "-1-z3",
    "eta": "z7+z7^2+z7^4",
    "eta_bar": "-1-z7-z7^2-z7^4",
}


class GoldenFileError(ValueError):
    """Malformed reference data file."""


def _parse_value(text: str) -> Cyclotomic:
    body = text
    sign = 1
    if body.startswith("-") and body[1:] in _SYMBOLS:
        sign, body = -1, body[1:]
    if body in _SYMBOLS:
        body = _SYMBOLS[body]
    value = Cyclotomic.parse(body)
    return value.scale(-1) if sign < 0 else value


@dataclass(frozen=True)
class FlaggedCell:
    row_label: str | None  # None for a header (size) cell
    column: int
    printed: str
    corrected: str


@dataclass
class GoldenTable:
    path: str
    names: list[str]
    order: int
    sizes: list[int]
    orders: dict[str, list[int]]
    labels: list[str]
    values: list[list[Cyclotomic]]
    flags: list[FlaggedCell]

    @property
    def n_classes(self) -> int:
        return len(self.sizes)


def _split_flag(cell: str) -> tuple[str, str | None]:
    if "!" in cell:
        printed, corrected = cell.split("!", 1)
        return corrected, printed
    return cell, None


def load_golden_table(path: Path | str) -> GoldenTable:
    path = Path(path)
    names: list[str] = []
    order = 0
    sizes: list[int] = []
    orders: dict[str, list[int]] = {}
    labels: list[str] = []
    values: list[list[Cyclotomic]] = []
    flags: list[FlaggedCell] = []
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise GoldenFileError(f"cannot read reference table {path}: {exc}") from exc
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        try:
            if kind == "group":
                names = fields[1:]
            elif kind == "order":
                order = int(fields[1])
            elif kind == "sizes":
                for col, cell in enumerate(fields[1:]):
                    val, printed = _split_flag(cell)
                    sizes.append(int(val))
                    if printed is not None:
                        flags.append(FlaggedCell(None, col, printed, val))
            elif kind == "orders":
                orders[fields[1]] = [int(x) for x in fields[2:]]
            elif kind == "irrep":
                label = fields[1]
                row = []
                for col, cell in enumerate(fields[2:]):
                    val, printed = _split_flag(cell)
                    row.append(_parse_value(val))
                    if printed is not None:
                        flags.append(FlaggedCell(label, col, printed, val))
                labels.append(label)
                values.append(row)
            else:
                raise GoldenFileError(f"unknown directive {kind!r}")
        except (ValueError, IndexError) as exc:
            raise GoldenFileError(f"{path.name}: bad line {raw!r}: {exc}") from exc
    if not names or not sizes or not labels:
        raise GoldenFileError(f"{path.name}: incomplete reference table")
    if sum(sizes) != order:
        raise GoldenFileError(f"{path.name}: class sizes do not sum to the order")
    for name, olist in orders.items():
        if len(olist) != len(sizes):
            raise GoldenFileError(f"{path.name}: orders row for {name} has wrong length")
    for label, row in zip(labels, values):
        if len(row) != len(sizes):
            raise GoldenFileError(f"{path.name}: row {label} has wrong length")
    return GoldenTable(str(path), names, order, sizes, orders, labels, values, flags)


@dataclass
class Alignment:
    """A verified match between a computed table and a reference table."""

    golden: GoldenTable
    group_name: str
    table: CharacterTable
    col_to_class: tuple[int, ...]   # reference column -> computed class index
    label_to_row: dict[str, int]    # reference label -> computed row index
    row_to_label: dict[int, str]

    def irrep_index(self, label: str) -> int:
        if label not in self.label_to_row:
            raise KeyError(f"unknown irrep label {label!r} for {self.group_name}")
        return self.label_to_row[label]

    def labels_in_order(self) -> list[str]:
        return list(self.golden.labels)


def find_alignments(table: CharacterTable, golden: GoldenTable, group_name: str,
                    cap: int = 20160) -> list[Alignment]:
    """All column/row matchings making the computed table equal the reference.

    Columns may only be permuted within identical (size, element-order)
    groups; row matching is then forced cell-by-cell.
    """
    if group_name not in golden.orders:
        raise GoldenFileError(f"{golden.path}: no orders row for {group_name}")
    if table.group.order != golden.order:
        return []
    classes = table.classes
    if len(classes) != golden.n_classes:
        return []
    golden_orders = golden.orders[group_name]
    golden_meta = [(golden.sizes[c], golden_orders[c]) for c in range(golden.n_classes)]
    computed_meta = [(c.size, c.element_order) for c in classes]
    if sorted(golden_meta) != sorted(computed_meta):
        return []

    groups: dict[tuple[int, int], tuple[list[int], list[int]]] = {}
    for col, meta in enumerate(golden_meta):
        groups.setdefault(meta, ([], []))[0].append(col)
    for idx, meta in enumerate(computed_meta):
        groups[meta][1].append(idx)

    total = 1
    for cols, idxs in groups.values():
        f = 1
        for t in range(2, len(cols) + 1):
            f *= t
        total *= f
    if total > cap:
        raise GoldenFileError(f"too many candidate column matchings ({total})")

    cell_str = [[str(v) for v in row.values] for row in table.rows]
    golden_rows = {}
    for label, row in zip(golden.labels, golden.values):
        key = tuple(str(v) for v in row)
        if key in golden_rows:
            raise GoldenFileError(f"{golden.path}: duplicate reference rows")
        golden_rows[key] = label

    metas = sorted(groups)
    choices = [list(permutations(groups[m][1])) for m in metas]
    alignments = []
    for combo in product(*choices):
        col_to_class = [0] * golden.n_classes
        for meta, perm in zip(metas, combo):
            for col, idx in zip(groups[meta][0], perm):
                col_to_class[col] = idx
        label_to_row: dict[str, int] = {}
        ok = True
        for i in range(len(table.rows)):
            key = tuple(cell_str[i][col_to_class[c]] for c in range(golden.n_classes))
            label = golden_rows.get(key)
            if label is None or label in label_to_row:
                ok = False
                break
            label_to_row[label] = i
        if ok:
            alignments.append(Alignment(
                golden, group_name, table, tuple(col_to_class),
                label_to_row, {i: lab for lab, i in label_to_row.items()},
            ))
    return alignments


# -- tensor and branching reference lists -------------------------------------

@dataclass(frozen=True)
class ProductLine:
    left: str
    right: str
    terms: tuple[tuple[str, int], ...]
    flagged: bool
    raw: str


@dataclass(frozen=True)
class BranchLine:
    parent: str
    terms: tuple[tuple[str, int], ...]
    raw: str


def _parse_terms(text: str) -> tuple[tuple[str, int], ...]:
    terms: dict[str, int] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise GoldenFileError(f"empty term in {text!r}")
        if "(" in chunk:
            mult_str, rest = chunk.split("(", 1)
            if not rest.endswith(")"):
                raise GoldenFileError(f"bad term {chunk!r}")
            mult = int(mult_str)
            label = rest[:-1].strip()
        else:
            mult, label = 1, chunk
        terms[label] = terms.get(label, 0) + mult
    return tuple(sorted(terms.items()))


def load_tensor_lines(path: Path | str) -> list[ProductLine]:
    path = Path(path)
    out = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        flagged = line.startswith("!")
        if flagged:
            line = line[1:].strip()
        head, rhs = line.split("=", 1)
        left, right = (part.strip() for part in head.split("x", 1))
        out.append(ProductLine(left, right, _parse_terms(rhs), flagged, line))
    if not out:
        raise GoldenFileError(f"{path.name}: no tensor lines")
    return out


def load_branch_lines(path: Path | str) -> list[BranchLine]:
    path = Path(path)
    out = []
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, rhs = line.split("->", 1)
        out.append(BranchLine(head.strip(), _parse_terms(rhs), line))
    if not out:
        raise GoldenFileError(f"{path.name}: no branch lines")
    return out


def multiset_from_multiplicities(mults: list[int], alignment: Alignment) -> tuple[tuple[str, int], ...]:
    terms = []
    for i, m in enumerate(mults):
        if m:
            terms.append((alignment.row_to_label[i], m))
    return tuple(sorted(terms))


def render_terms(terms: tuple[tuple[str, int], ...], label_order: list[str]) -> str:
    ordered = sorted(terms, key=lambda t: label_order.index(t[0]))
    parts = [label if m == 1 else f"{m}({label})" for label, m in ordered]
    return " + ".join(parts)


@dataclass(frozen=True)
class LineCheck:
    line: str
    matches: bool
    flagged: bool
    computed: str


def check_tensor_lines(alignment: Alignment, lines: list[ProductLine]) -> list[LineCheck]:
    table = alignment.table
    results = []
    for line in lines:
        i = alignment.irrep_index(line.left)
        j = alignment.irrep_index(line.right)
        mults = tensor_decompose(table, i, j)
        computed = multiset_from_multiplicities(mults, alignment)
        results.append(LineCheck(
            line.raw,
            computed == line.terms,
            line.flagged,
            render_terms(computed, alignment.labels_in_order()),
        ))
    return results


def find_tensor_relabeling(alignment: Alignment,
                           lines: list[ProductLine]) -> dict[str, str] | None:
    """A degree-preserving relabeling reproducing every non-flagged tensor line.

    Returns a map from the labels used by the product list to the aligned
    table labels (identity when the list already matches), or None.  This
    reconciles sources whose product lists enumerate equal-degree irreps in
    a different order than their own character table rows.
    """
    table = alignment.table
    degrees = table.degrees()
    by_degree: dict[int, list[int]] = {}
    for i, d in enumerate(degrees):
        by_degree.setdefault(d, []).append(i)
    label_degree = {lab: degrees[row] for lab, row in alignment.label_to_row.items()}
    labels_by_degree: dict[int, list[str]] = {}
    for lab in alignment.golden.labels:
        labels_by_degree.setdefault(label_degree[lab], []).append(lab)

    total = 1
    for rows in by_degree.values():
        f = 1
        for t in range(2, len(rows) + 1):
            f *= t
        total *= f
    if total > 10**5:
        raise GoldenFileError(f"too many candidate relabelings ({total})")

    cache: dict[tuple[int, int], list[int]] = {}

    def mults(i: int, j: int) -> list[int]:
        key = (i, j) if i <= j else (j, i)
        if key not in cache:
            cache[key] = tensor_decompose(table, *key)
        return cache[key]

    checked = [line for line in lines if not line.flagged]
    degs = sorted(by_degree)
    for combo in product(*(permutations(by_degree[d]) for d in degs)):
        label_to_row = {}
        for d, perm in zip(degs, combo):
            for lab, row in zip(labels_by_degree[d], perm):
                label_to_row[lab] = row
        row_to_label = {r: lab for lab, r in label_to_row.items()}
        ok = True
        for line in checked:
            got = tuple(sorted((row_to_label[k], m) for k, m in
                               enumerate(mults(label_to_row[line.left],
                                               label_to_row[line.right])) if m))
            if got != line.terms:
                ok = False
                break
        if ok:
            return {lab: alignment.row_to_label[row] for lab, row in label_to_row.items()}
    return None


def check_branch_lines(parent: Alignment, child: Alignment,
                       branch_matrix: list[list[int]],
                       lines: list[BranchLine]) -> list[LineCheck]:
    results = []
    for line in lines:
        i = parent.irrep_index(line.parent)
        computed = multiset_from_multiplicities(branch_matrix[i], child)
        results.append(LineCheck(
            line.raw,
            computed == line.terms,
            False,
            render_terms(computed, child.labels_in_order()),
        ))
    return results
