"""Exact character tables and representation arithmetic.

Tables are computed with the Dixon-Schneider method: the class-sum
multiplication matrices are simultaneously diagonalized over a prime field
GF(p) with p = 1 (mod exponent) and p > 2*floor(sqrt(|G|)), and the
eigenvalue data is lifted back to exact cyclotomic character values through
discrete logarithms against a fixed primitive root.  Every table is checked
against both orthogonality relations before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .groups import Group, ConjugacyClass
from .scalars import Cyclotomic

Matrix = list[list[int]]


class SplitFailure(RuntimeError):
    """The class matrices failed to separate all eigenspaces (a bug if raised)."""


# -- small number theory ----------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*floor(sqrt(order))."""
    bound = 2 * isqrt(order)
    p = exponent + 1
    while p <= bound or not is_prime(p):
        p += exponent
        if p > 10**7:
            raise RuntimeError("no suitable Dixon prime found")
    return p


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo the prime p."""
    factors = []
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise RuntimeError("no primitive root (p not prime?)")


# -- class algebra ----------------------------------------------------------

class ClassAlgebra:
    """Structure constants a_ijk with C_i * C_j = sum_k a_ijk C_k."""

    def __init__(self, group: Group):
        self.group = group
        classes = group.classes
        r = len(classes)
        coeff = [[[0] * r for _ in range(r)] for _ in range(r)]
        class_of = group.class_of
        for k, ck in enumerate(classes):
            z = ck.representative
            for idx, x in enumerate(group.elements):
                i = class_of[idx]
                y = x.inverse() * z
                j = class_of[group.index[y]]
                coeff[i][j][k] += 1
        self.coeff = coeff

    def a(self, i: int, j: int, k: int) -> int:
        return self.coeff[i][j][k]

    def matrix(self, i: int) -> Matrix:
        """M_i with (M_i)[j][k] = a_ijk, so that M_i w = omega_i w for the
        class-function eigenvectors w (w_k = |C_k| chi(g_k) / chi(1))."""
        return [list(row) for row in self.coeff[i]]


def class_algebra(group: Group) -> ClassAlgebra:
    return ClassAlgebra(group)


# -- GF(p) linear algebra ----------------------------------------------------

def _echelon(vectors: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns, over GF(p)."""
    rows = [[x % p for x in v] for v in vectors]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _charpoly(mat: Matrix, p: int) -> list[int]:
    """Characteristic polynomial mod p (ascending), by Faddeev-LeVerrier."""
    n = len(mat)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(mat[i][t] * m[t][j] for t in range(n)) % p for j in range(n)]
              for i in range(n)]
        tr = sum(am[i][i] for i in range(n)) % p
        c = (-tr * pow(k, p - 2, p)) % p
        coeffs[n - k] = c
        m = [[(am[i][j] + (c if i == j else 0)) % p for j in range(n)] for i in range(n)]
    return coeffs


def _poly_roots(coeffs: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _nullspace(mat: Matrix, p: int) -> list[list[int]]:
    n = len(mat)
    rows, pivots = _echelon(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rows[r][fc]) % p
        basis.append(v)
    return basis


class _Subspace:
    """An invariant subspace kept as a reduced echelon basis."""

    def __init__(self, vectors: list[list[int]], p: int):
        self.rows, self.pivots = _echelon(vectors, p)
        self.p = p

    @property
    def dim(self) -> int:
        return len(self.rows)

    def coords(self, vec: list[int]) -> list[int]:
        """Coordinates of vec against the echelon basis; error if outside."""
        p = self.p
        v = [x % p for x in vec]
        out = []
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            out.append(c)
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        if any(v):
            raise SplitFailure("vector escapes an invariant subspace")
        return out

    def restrict(self, mat: Matrix) -> Matrix:
        """Matrix of mat restricted to this subspace, in the echelon basis."""
        n = len(mat)
        cols = []
        for b in self.rows:
            image = [sum(mat[c][d] * b[d] for d in range(n)) % self.p for c in range(n)]
            cols.append(self.coords(image))
        # cols[t] = coordinates of mat*b_t; transpose into a matrix acting on coords
        k = self.dim
        return [[cols[t][s] for t in range(k)] for s in range(k)]

    def lift(self, coords: list[int]) -> list[int]:
        n = len(self.rows[0])
        return [sum(coords[t] * self.rows[t][c] for t in range(self.dim)) % self.p
                for c in range(n)]


# -- character tables --------------------------------------------------------

@dataclass(frozen=True)
class CharacterRow:
    degree: int
    values: tuple[Cyclotomic, ...]


class CharacterTable:
    """Irreducible characters of a group, rows sorted by (degree, values)."""

    def __init__(self, group: Group, rows: tuple[CharacterRow, ...], prime: int):
        self.group = group
        self.rows = rows
        self.prime = prime

    @property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return self.group.classes

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.degree for row in self.rows)

    def value_matrix(self) -> list[list[Cyclotomic]]:
        return [list(row.values) for row in self.rows]


def character_table(group: Group) -> CharacterTable:
    classes = group.classes
    r = len(classes)
    algebra = class_algebra(group)
    p = dixon_prime(group.exponent, group.order)
    matrices = [algebra.matrix(i) for i in range(r)]

    subspaces = [_Subspace([[1 if i == j else 0 for j in range(r)] for i in range(r)], p)]
    for i in range(1, r):
        if all(s.dim == 1 for s in subspaces):
            break
        mi = matrices[i]
        refined: list[_Subspace] = []
        for space in subspaces:
            if space.dim == 1:
                refined.append(space)
                continue
            restricted = space.restrict(mi)
            total = 0
            for lam in _poly_roots(_charpoly(restricted, p), p):
                shifted = [[(restricted[a][b] - (lam if a == b else 0)) % p
                            for b in range(space.dim)] for a in range(space.dim)]
                kernel = _nullspace(shifted, p)
                if kernel:
                    refined.append(_Subspace([space.lift(c) for c in kernel], p))
                    total += len(kernel)
            if total != space.dim:
                raise SplitFailure("class matrix not diagonalizable over GF(p)")
        subspaces = refined
    if any(s.dim != 1 for s in subspaces):
        raise SplitFailure("common eigenspaces did not all reach dimension 1")

    rows = []
    seen = set()
    for space in subspaces:
        w = space.rows[0]
        if w[0] == 0:
            raise SplitFailure("eigenvector vanishes at the identity class")
        scale = pow(w[0], p - 2, p)
        w = [(x * scale) % p for x in w]
        row = _lift_row(group, w, p)
        key = tuple(str(v) for v in row.values)
        if key in seen:
            raise SplitFailure("duplicate character row")
        seen.add(key)
        rows.append(row)
    rows.sort(key=lambda row: (row.degree, tuple(str(v) for v in row.values)))
    table = CharacterTable(group, tuple(rows), p)
    _check_table(table)
    return table


def _power_classes(group: Group, k: int) -> list[int]:
    """Class index of rep**t for t = 0..order-1, for class index k."""
    cls = group.classes[k]
    rep = cls.representative
    out = []
    g = group.identity
    for _ in range(cls.element_order):
        out.append(group.class_index(g))
        g = g * rep
    return out


def _lift_row(group: Group, w: list[int], p: int) -> CharacterRow:
    classes = group.classes
    r = len(classes)
    inv_class = group.inverse_class
    # |G| / d^2 = sum_k w_k w_{k-bar} / |C_k|  (second orthogonality for omega)
    s = 0
    for k in range(r):
        s = (s + w[k] * w[inv_class[k]] * pow(classes[k].size, p - 2, p)) % p
    d_sq = (group.order * pow(s, p - 2, p)) % p
    degree = next((d for d in range(1, isqrt(group.order) + 1) if d * d % p == d_sq), None)
    if degree is None:
        raise SplitFailure("no integer degree matches the eigenvector")
    chi_mod = [(degree * w[k] * pow(classes[k].size, p - 2, p)) % p for k in range(r)]

    z = primitive_root(p)
    values = []
    for k in range(r):
        m = classes[k].element_order
        if m == 1:
            values.append(Cyclotomic.from_rational(degree))
            continue
        powers = _power_classes(group, k)
        theta = pow(z, (p - 1) // m, p)
        minv = pow(m, p - 2, p)
        parts: dict[int, Fraction] = {}
        total = 0
        for j in range(m):
            acc = 0
            for t in range(m):
                acc = (acc + chi_mod[powers[t]] * pow(theta, (-j * t) % (p - 1), p)) % p
            mult = (acc * minv) % p
            if mult > degree:
                raise SplitFailure("root-of-unity multiplicity exceeds the degree")
            if mult:
                parts[j] = Fraction(mult)
                total += mult
        if total != degree:
            raise SplitFailure("root-of-unity multiplicities do not sum to the degree")
        value = Cyclotomic.make(m, parts)
        if _reduce_mod_p(value, theta, m, p) != chi_mod[k]:
            raise SplitFailure("cyclotomic lift does not reduce back mod p")
        values.append(value)
    return CharacterRow(degree, tuple(values))


def _reduce_mod_p(value: Cyclotomic, theta: int, m: int, p: int) -> int:
    """Evaluate value mod p sending zeta_m -> theta (conductor divides m)."""
    step = m // value.conductor
    acc = 0
    for e, c in value.coeffs:
        acc = (acc + c.numerator * pow(c.denominator, p - 2, p)
               * pow(theta, (e * step) % (p - 1), p)) % p
    return acc


def _check_table(table: CharacterTable) -> None:
    group = table.group
    classes = group.classes
    r = len(classes)
    rows = table.rows
    if len(rows) != r:
        raise SplitFailure("row count differs from class count")
    if sum(row.degree ** 2 for row in rows) != group.order:
        raise SplitFailure("degrees do not satisfy the sum-of-squares identity")
    for row in rows:
        if group.order % row.degree != 0:
            raise SplitFailure("degree does not divide the group order")
        if not row.values[0].is_rational() or row.values[0].rational_value() != row.degree:
            raise SplitFailure("identity-class value differs from the degree")
        for k, v in enumerate(row.values):
            if classes[k].element_order % v.conductor != 0:
                raise SplitFailure("value conductor does not divide the element order")
    for i, chi in enumerate(rows):
        for j, psi in enumerate(rows):
            total = Cyclotomic.zero()
            for k in range(r):
                term = chi.values[k] * psi.values[k].conjugate()
                total = total + term.scale(classes[k].size)
            expect = group.order if i == j else 0
            if not total.is_rational() or total.rational_value() != expect:
                raise SplitFailure("row orthogonality failed")
    for k in range(r):
        for l in range(r):
            total = Cyclotomic.zero()
            for row in rows:
                total = total + row.values[k] * row.values[l].conjugate()
            expect = Fraction(group.order, classes[k].size) if k == l else Fraction(0)
            if not total.is_rational() or total.rational_value() != expect:
                raise SplitFailure("column orthogonality failed")


# -- characters and representation arithmetic --------------------------------

def natural_character(group: Group) -> CharacterRow:
    """Trace of the defining signed-permutation representation, per class."""
    values = []
    for cls in group.classes:
        rep = cls.representative
        tr = sum(s for i, (j, s) in enumerate(zip(rep.image, rep.signs)) if j == i)
        values.append(Cyclotomic.from_rational(tr))
    return CharacterRow(group.degree, tuple(values))


def inner_product(chi: CharacterRow, psi: CharacterRow, group: Group) -> Fraction:
    """(1/|G|) sum_k |C_k| chi(k) conj(psi(k)); rational for class functions."""
    total = Cyclotomic.zero()
    for k, cls in enumerate(group.classes):
        term = chi.values[k] * psi.values[k].conjugate()
        total = total + term.scale(cls.size)
    if not total.is_rational():
        raise ValueError("inner product is not rational")
    return total.rational_value() / group.order


def decompose(chi: CharacterRow, table: CharacterTable) -> list[int]:
    """Multiplicities of chi against the irreducible rows of the table."""
    mults = []
    for row in table.rows:
        m = inner_product(chi, row, table.group)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"non-integral multiplicity {m}")
        mults.append(int(m))
    if sum(m * row.degree for m, row in zip(mults, table.rows)) != chi.degree:
        raise ValueError("decomposition does not preserve the dimension")
    return mults


def tensor_decompose(table: CharacterTable, i: int, j: int) -> list[int]:
    """Decomposition of irrep_i (x) irrep_j as multiplicities over the table."""
    chi, psi = table.rows[i], table.rows[j]
    product = CharacterRow(
        chi.degree * psi.degree,
        tuple(a * b for a, b in zip(chi.values, psi.values)),
    )
    return decompose(product, table)


def class_fusion(parent: Group, child: Group) -> list[int]:
    """Parent class index containing each child class."""
    fusion = []
    for cls in child.classes:
        if cls.representative not in parent:
            raise ValueError("subgroup element not found in the parent group")
        fusion.append(parent.class_index(cls.representative))
    return fusion


def restrict_row(chi: CharacterRow, fusion: list[int]) -> CharacterRow:
    return CharacterRow(chi.degree, tuple(chi.values[k] for k in fusion))


def branch(parent_table: CharacterTable, child_table: CharacterTable) -> list[list[int]]:
    """Branching matrix: row i lists multiplicities of parent irrep i over the child."""
    fusion = class_fusion(parent_table.group, child_table.group)
    return [decompose(restrict_row(row, fusion), child_table) for row in parent_table.rows]


def frobenius_schur(table: CharacterTable, i: int) -> int:
    """(1/|G|) sum_g chi(g^2), via the squaring power map; in {-1, 0, +1}."""
    group = table.group
    pm = group.power_map(2)
    total = Cyclotomic.zero()
    for k, cls in enumerate(group.classes):
        total = total + table.rows[i].values[pm[k]].scale(cls.size)
    value = total.rational_value() / group.order
    if value.denominator != 1 or abs(value) > 1:
        raise ValueError(f"Frobenius-Schur indicator {value} out of range")
    return int(value)
