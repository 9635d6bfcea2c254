"""Quaternions over Q(sqrt(2)), the binary octahedral group, and its pair group.

The 48 unit quaternions of the binary octahedral group split into six cosets
of the quaternion group V0 = {+-1, +-e1, +-e2, +-e3}.  Pairs [p, q] acting by
h -> p h q and preserving V0 form a group of order 192 (after identifying
[p, q] with [-p, -q]); mapping the 3-dimensional conjugation action on
(e1, e2, e3) together with the 4-dimensional action on e7 * (1, e1, e2, e3)
= (e7, e4, e5, e6) yields degree-7 signed permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .scalars import QuadSqrt2, QUAD_ZERO, QUAD_ONE
from .signedperm import SignedPerm

COSET_NAMES = ("V0", "V+", "V-", "V1", "V2", "V3")

# multiplication of cosets (row = left factor); verified elementwise in coset_table()
COSET_TABLE: dict[tuple[str, str], str] = {}
for _row, _vals in zip(COSET_NAMES, (
    ("V0", "V+", "V-", "V1", "V2", "V3"),
    ("V+", "V-", "V0", "V3", "V1", "V2"),
    ("V-", "V0", "V+", "V2", "V3", "V1"),
    ("V1", "V2", "V3", "V0", "V+", "V-"),
    ("V2", "V3", "V1", "V-", "V0", "V+"),
    ("V3", "V1", "V2", "V+", "V-", "V0"),
)):
    for _col, _val in zip(COSET_NAMES, _vals):
        COSET_TABLE[(_row, _col)] = _val

# the coset of q = conj(V0 p V0) paired with each coset of p
PAIRED_COSET = {"V0": "V0", "V+": "V-", "V-": "V+", "V1": "V1", "V2": "V2", "V3": "V3"}


@dataclass(frozen=True)
class Quaternion:
    """Quaternion over Q(sqrt(2)) on the basis (1, e1, e2, e3)."""

    coeffs: tuple[QuadSqrt2, QuadSqrt2, QuadSqrt2, QuadSqrt2]

    @staticmethod
    def of(*vals: QuadSqrt2 | Fraction | int) -> "Quaternion":
        vals = vals + (0,) * (4 - len(vals))
        return Quaternion(tuple(v if isinstance(v, QuadSqrt2) else QuadSqrt2.of(v)
                                for v in vals))

    @staticmethod
    def unit(i: int) -> "Quaternion":
        coeffs = [QUAD_ZERO] * 4
        coeffs[i] = QUAD_ONE
        return Quaternion(tuple(coeffs))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        out = [QUAD_ZERO] * 4
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                c = a * b
                if i == 0:
                    k, s = j, 1
                elif j == 0:
                    k, s = i, 1
                elif i == j:
                    k, s = 0, -1
                else:
                    k, s = _QTAB[(i, j)]
                out[k] = out[k] + (c if s > 0 else -c)
        return Quaternion(tuple(out))

    def conjugate(self) -> "Quaternion":
        return Quaternion((self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]))

    def norm(self) -> QuadSqrt2:
        total = QUAD_ZERO
        for c in self.coeffs:
            total = total + c * c
        return total

    def __str__(self) -> str:
        names = ("1", "e1", "e2", "e3")
        parts = [f"({c})*{n}" for c, n in zip(self.coeffs, names) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


_QTAB = {}
for (_i, _j, _k) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
    _QTAB[(_i, _j)] = (_k, 1)
    _QTAB[(_j, _i)] = (_k, -1)

QUAT_ONE = Quaternion.unit(0)


@lru_cache(maxsize=1)
def binary_octahedral() -> dict[Quaternion, str]:
    """The 48 unit quaternions, mapped to their coset labels."""
    elements: dict[Quaternion, str] = {}

    def put(q: Quaternion, label: str) -> None:
        assert q not in elements
        assert q.norm() == QUAD_ONE
        elements[q] = label

    for i in range(4):
        for s in (1, -1):
            coeffs = [QUAD_ZERO] * 4
            coeffs[i] = QuadSqrt2.of(s)
            put(Quaternion(tuple(coeffs)), "V0")
    for signs in product((1, -1), repeat=4):
        q = Quaternion(tuple(QuadSqrt2.of(Fraction(s, 2)) for s in signs))
        put(q, "V+" if signs.count(1) % 2 == 0 else "V-")
    half = Fraction(1, 2)
    for i in (1, 2, 3):
        label = f"V{i}"
        j, k = [x for x in (1, 2, 3) if x != i]
        for s0, si in product((1, -1), repeat=2):
            coeffs = [QUAD_ZERO] * 4
            coeffs[0] = QuadSqrt2.of(0, s0 * half)
            coeffs[i] = QuadSqrt2.of(0, si * half)
            put(Quaternion(tuple(coeffs)), label)
        for sj, sk in product((1, -1), repeat=2):
            coeffs = [QUAD_ZERO] * 4
            coeffs[j] = QuadSqrt2.of(0, sj * half)
            coeffs[k] = QuadSqrt2.of(0, sk * half)
            put(Quaternion(tuple(coeffs)), label)
    assert len(elements) == 48
    return elements


def coset_of(q: Quaternion) -> str:
    group = binary_octahedral()
    if q not in group:
        raise ValueError("quaternion is not in the binary octahedral group")
    return group[q]


def coset_product(s: str, t: str) -> str:
    if s not in COSET_NAMES or t not in COSET_NAMES:
        raise ValueError(f"unknown coset label: {s!r} / {t!r}")
    return COSET_TABLE[(s, t)]


def verify_coset_table() -> bool:
    """Recompute every coset product elementwise and compare with the table."""
    group = binary_octahedral()
    members: dict[str, list[Quaternion]] = {name: [] for name in COSET_NAMES}
    for q, label in group.items():
        members[label].append(q)
    for s in COSET_NAMES:
        for t in COSET_NAMES:
            got = {group[a * b] for a in members[s] for b in members[t]}
            if got != {COSET_TABLE[(s, t)]}:
                return False
    return True


@dataclass(frozen=True)
class QuaternionPair:
    """The SO(4) element h -> p h q, stored with the sign of p canonicalized."""

    p: Quaternion
    q: Quaternion

    @staticmethod
    def of(p: Quaternion, q: Quaternion) -> "QuaternionPair":
        for c in p.coeffs:
            s = c.sign()
            if s < 0:
                return QuaternionPair(-p, -q)
            if s > 0:
                return QuaternionPair(p, q)
        raise ValueError("zero quaternion in a pair")

    def __mul__(self, other: "QuaternionPair") -> "QuaternionPair":
        """Apply self first, then other: h -> p' (p h q) q'."""
        return QuaternionPair.of(other.p * self.p, self.q * other.q)

    def inverse(self) -> "QuaternionPair":
        return QuaternionPair.of(self.p.conjugate(), self.q.conjugate())

    def __lt__(self, other: "QuaternionPair") -> bool:
        return _pair_key(self) < _pair_key(other)


def _pair_key(g: QuaternionPair):
    return tuple((c.a, c.b) for c in g.p.coeffs + g.q.coeffs)


@lru_cache(maxsize=1)
def pair_group() -> tuple[QuaternionPair, ...]:
    """The 192 pairs [p, q] preserving V0, from the six coset pairings."""
    group = binary_octahedral()
    members: dict[str, list[Quaternion]] = {name: [] for name in COSET_NAMES}
    for q, label in group.items():
        members[label].append(q)
    pairs = set()
    for p_label, q_label in PAIRED_COSET.items():
        for p in members[p_label]:
            for q in members[q_label]:
                pairs.add(QuaternionPair.of(p, q))
    assert len(pairs) == 192
    return tuple(sorted(pairs))


_FOUR_BLOCK = (7, 4, 5, 6)  # octonion indices of e7 * (1, e1, e2, e3)


def _unit_form(q: Quaternion) -> tuple[int, int] | None:
    """(basis index, sign) when q = +-(basis quaternion), else None."""
    idx = None
    for i, c in enumerate(q.coeffs):
        if not c.is_zero():
            if idx is not None:
                return None
            idx = i
    if idx is None:
        return None
    c = q.coeffs[idx]
    if c == QUAD_ONE:
        return idx, 1
    if c == -QUAD_ONE:
        return idx, -1
    return None


def pair_to_signedperm7(g: QuaternionPair) -> SignedPerm:
    """Degree-7 signed permutation of the pair: conjugation by p on (e1, e2, e3)
    and h -> p h q on the block (e7, e4, e5, e6)."""
    img = [0] * 7
    sgn = [1] * 7
    pc = g.p.conjugate()
    for i in (1, 2, 3):
        r = g.p * Quaternion.unit(i) * pc
        unit = _unit_form(r)
        if unit is None or unit[0] == 0:
            raise ValueError("pair does not act monomially on the quaternion units")
        img[i - 1] = unit[0] - 1
        sgn[i - 1] = unit[1]
    for i, oct_idx in enumerate(_FOUR_BLOCK):
        r = g.p * Quaternion.unit(i) * g.q
        unit = _unit_form(r)
        if unit is None:
            raise ValueError("pair does not preserve the quaternion group V0")
        img[oct_idx - 1] = _FOUR_BLOCK[unit[0]] - 1
        sgn[oct_idx - 1] = unit[1]
    return SignedPerm(tuple(img), tuple(sgn))
