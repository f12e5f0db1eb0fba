"""Exact row-echelon machinery over Q(lambda) coordinate vectors.

Internal helper shared by the invariant-basis and generation-degree code.
Vectors are lists of CycloNum with a common n; pivoting is deterministic
(first nonzero coordinate in column order), pivots are normalized to 1 and
rows are kept fully reduced, so every basis built here is canonical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cyclo import CycloNum


class EchelonBasis:
    """A reduced row-echelon family of vectors, grown by insertion.

    ``aug`` extra trailing coordinates ride along untouched by pivot
    selection; they track row combinations so the same structure can solve
    exact linear systems against a fixed spanning set.
    """

    def __init__(self, width: int, n: int, aug: int = 0):
        self.width = width
        self.aug = aug
        self.n = n
        self.rows: list[list[CycloNum]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residual(self, vec: Sequence[CycloNum]) -> list[CycloNum]:
        """Reduce vec against the current rows; returns a fresh list."""
        out = list(vec)
        if len(out) != self.width + self.aug:
            raise ValueError("vector width mismatch")
        for row, piv in zip(self.rows, self.pivots):
            c = out[piv]
            if not c.is_zero():
                for j in range(len(out)):
                    if not row[j].is_zero():
                        out[j] = out[j] - c * row[j]
        return out

    def insert(self, vec: Sequence[CycloNum]) -> bool:
        """Insert vec if independent; returns True when the rank grew."""
        red = self.residual(vec)
        piv = next((j for j in range(self.width) if not red[j].is_zero()), None)
        if piv is None:
            if self.aug and any(not c.is_zero() for c in red[self.width:]):
                raise ValueError("vector depends on earlier insertions")
            return False
        inv = red[piv].inverse()
        red = [c * inv for c in red]
        for row in self.rows:
            c = row[piv]
            if not c.is_zero():
                for j in range(len(row)):
                    if not red[j].is_zero():
                        row[j] = row[j] - c * red[j]
        at = next((k for k, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, red)
        self.pivots.insert(at, piv)
        return True


def rank_of(rows: Iterable[Sequence[CycloNum]], width: int, n: int) -> int:
    ech = EchelonBasis(width, n)
    for row in rows:
        ech.insert(row)
    return ech.rank


class SpanSolver:
    """Expresses vectors exactly in a fixed linearly independent spanning set."""

    def __init__(self, basis: Sequence[Sequence[CycloNum]], width: int, n: int):
        self.width = width
        self.size = len(basis)
        zero = CycloNum.zero(n)
        one = CycloNum.one(n)
        self._ech = EchelonBasis(width, n, aug=self.size)
        for r, vec in enumerate(basis):
            tail = [zero] * self.size
            tail[r] = one
            if not self._ech.insert(list(vec) + tail):
                raise ValueError("spanning set is linearly dependent")
        self._zero_tail = [zero] * self.size

    def solve(self, target: Sequence[CycloNum]) -> list[CycloNum] | None:
        """Coefficients y with sum(y_r * basis_r) == target, or None."""
        red = self._ech.residual(list(target) + self._zero_tail)
        if any(not c.is_zero() for c in red[: self.width]):
            return None
        return [-c for c in red[self.width:]]
