"""Signed permutations: monomial matrices with entries +-1.

An element of degree n sends basis vector i to ``signs[i] * (basis vector
image[i])``; indices are 0-based internally and 1-based in the text notation.

Composition convention: ``g * h`` applies g first, then h.  With matrices
acting on row vectors from the right this is the ordinary matrix product
``M(g) @ M(h)``.  Conjugation is written ``conjugate(x, g) = g * x * g**-1``
(apply g, then x, then g inverse); this is the orientation under which the
conjugation action of the catalog generators on the diagonal involutions
reproduces their quotient counterparts literally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm


@dataclass(frozen=True)
class SignedPerm:
    image: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError("image is not a permutation")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1, one per point")

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.image)

    @staticmethod
    def identity(n: int) -> "SignedPerm":
        return SignedPerm(tuple(range(n)), (1,) * n)

    @staticmethod
    def diagonal(signs: tuple[int, ...] | list[int]) -> "SignedPerm":
        return SignedPerm(tuple(range(len(signs))), tuple(signs))

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Apply self first, then other."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        img = tuple(other.image[j] for j in self.image)
        sgn = tuple(s * other.signs[j] for j, s in zip(self.image, self.signs))
        return SignedPerm(img, sgn)

    def inverse(self) -> "SignedPerm":
        n = self.degree
        img = [0] * n
        sgn = [1] * n
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            img[j] = i
            sgn[j] = s
        return SignedPerm(tuple(img), tuple(sgn))

    def __pow__(self, k: int) -> "SignedPerm":
        if k < 0:
            return self.inverse() ** (-k)
        result = SignedPerm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        """Least k >= 1 with self**k = identity, from the signed cycle shape."""
        n = self.degree
        seen = [False] * n
        result = 1
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            sign = 1
            i = start
            while not seen[i]:
                seen[i] = True
                sign *= self.signs[i]
                i = self.image[i]
                length += 1
            result = lcm(result, length if sign == 1 else 2 * length)
        return result

    def apply(self, i: int) -> tuple[int, int]:
        """Image of 0-based point i as (point, sign)."""
        return self.image[i], self.signs[i]

    def is_diagonal(self) -> bool:
        return self.image == tuple(range(self.degree))

    def underlying(self) -> "SignedPerm":
        """The same permutation with all signs +1."""
        return SignedPerm(self.image, (1,) * self.degree)

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Canonical encoding used for ordering and deduplication."""
        return (self.image, self.signs)

    def __lt__(self, other: "SignedPerm") -> bool:
        return self.key() < other.key()

    def matrix(self) -> list[list[int]]:
        """Row i holds the image of basis vector i."""
        n = self.degree
        rows = [[0] * n for _ in range(n)]
        for i, (j, s) in enumerate(zip(self.image, self.signs)):
            rows[i][j] = s
        return rows

    def doubled_is_even(self) -> bool:
        """Parity of the induced permutation of the 2n points +-e_i (True = even)."""
        n = self.degree
        seen = [False] * n
        transpositions = 0
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            sign = 1
            i = start
            while not seen[i]:
                seen[i] = True
                sign *= self.signs[i]
                i = self.image[i]
                length += 1
            if sign == 1:
                # the doubled points split into two disjoint cycles of this length
                transpositions += 2 * (length - 1)
            else:
                # the doubled points form a single cycle of twice the length
                transpositions += 2 * length - 1
        return transpositions % 2 == 0

    # -- text notation ------------------------------------------------------

    _TOKEN = re.compile(r"-?e\d+")

    @staticmethod
    def parse(text: str, degree: int = 7) -> "SignedPerm":
        """Parse signed-cycle notation like ``(e1 -e5)(e2 -e3 e4 -e7 -e2 e3 -e4 e7)``.

        Each listed signed point maps to the next in its cycle (the last wraps
        to the first); unmentioned points are fixed with sign +1.  Listing both
        signed orbits of one underlying point is allowed when consistent.
        """
        mapping: dict[int, tuple[int, int]] = {}

        def record(i: int, si: int, j: int, sj: int) -> None:
            target = (j, si * sj)
            if i in mapping and mapping[i] != target:
                raise ValueError(f"inconsistent images for point {i + 1}")
            mapping[i] = target

        body = text.strip()
        if body in ("", "()"):
            return SignedPerm.identity(degree)
        if body.count("(") != body.count(")"):
            raise ValueError("unbalanced parentheses")
        for cycle in re.findall(r"\(([^()]*)\)", body):
            entries = []
            for token in cycle.replace(",", " ").split():
                if not SignedPerm._TOKEN.fullmatch(token):
                    raise ValueError(f"bad token {token!r}")
                sign = -1 if token.startswith("-") else 1
                idx = int(token[2:]) if sign < 0 else int(token[1:])
                if not 1 <= idx <= degree:
                    raise ValueError(f"index {idx} out of range for degree {degree}")
                entries.append((idx - 1, sign))
            for (i, si), (j, sj) in zip(entries, entries[1:] + entries[:1]):
                record(i, si, j, sj)
        img = list(range(degree))
        sgn = [1] * degree
        for i, (j, s) in mapping.items():
            img[i] = j
            sgn[i] = s
        return SignedPerm(tuple(img), tuple(sgn))

    def __str__(self) -> str:
        n = self.degree
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            if self.image[start] == start and self.signs[start] == 1:
                seen[start] = True
                continue
            entries = []
            i, s = start, 1
            while True:
                entries.append(f"-e{i + 1}" if s < 0 else f"e{i + 1}")
                seen[i] = True
                s *= self.signs[i]
                i = self.image[i]
                if i == start and s == 1:
                    break
            cycles.append("(" + " ".join(entries) + ")")
        return "".join(cycles) if cycles else "()"


def conjugate(x: SignedPerm, g: SignedPerm) -> SignedPerm:
    """g * x * g**-1 in the apply-left-first convention."""
    return g * x * g.inverse()
