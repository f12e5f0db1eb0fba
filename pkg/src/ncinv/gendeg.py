"""Generation-degree machinery: product spans, exact ranks, beta(g).

At each degree d the span of products of lower-degree invariants is compared
with the full invariant subspace; the codimension counts generators that
must be adjoined at d, and beta(g) is the largest degree needing any.
Two-factor products suffice: any longer product of lower-degree invariants
regroups as (all but the last factor) * (last factor), the left group being
itself a lower-degree invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .cyclo import CycloNum
from .linalg import EchelonBasis, SpanSolver, rank_of
from .ncalg import AlgebraSpec, NcPolynomial, monomial_basis, multiply
from .action import (
    GroupAction,
    invariant_basis,
    invariant_dimension_trace,
    verify_automorphism,
)

Matrix = list[list[CycloNum]]


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of one graded piece, rows in reduced echelon form."""

    degree: int
    rows: tuple

    @property
    def dimension(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    inv_dim: int
    product_dim: int
    new_gens: int

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "inv_dim": self.inv_dim,
            "product_dim": self.product_dim,
            "new_gens": self.new_gens,
        }


@dataclass(frozen=True)
class GenerationReport:
    spec: AlgebraSpec
    n: int
    scanned_degrees: tuple
    beta: int
    exhausted: bool

    def to_json(self) -> dict:
        return {
            "algebra": self.spec.to_json(),
            "n": self.n,
            "degrees": [r.to_json() for r in self.scanned_degrees],
            "beta": self.beta,
            "exhausted": self.exhausted,
        }


def product_span(
    act: GroupAction,
    d: int,
    bases: Mapping[int, Sequence[NcPolynomial]],
    stop_at: int | None = None,
) -> GradedSubspace:
    """Span of all products A^G_e * A^G_{d-e} for 0 < e < d, inside degree d.

    ``bases`` must carry an entry for every positive degree below d (empty
    lists where the invariant space vanishes).  ``stop_at`` allows an early
    exit once a known dimension is reached; the result is unchanged.
    """
    missing = [e for e in range(1, d) if e not in bases]
    if missing:
        raise ValueError(f"bases incomplete: missing degrees {missing}")
    coords = monomial_basis(act.spec, d)
    ech = EchelonBasis(len(coords), act.spec.n)
    for e in range(1, d):
        left, right = bases[e], bases[d - e]
        if not left or not right:
            continue
        for p in left:
            for q in right:
                ech.insert(multiply(act.spec, p, q).coordinates(coords))
                if stop_at is not None and ech.rank >= stop_at:
                    return GradedSubspace(degree=d, rows=tuple(map(tuple, ech.rows)))
    return GradedSubspace(degree=d, rows=tuple(map(tuple, ech.rows)))


def compute_beta(
    act: GroupAction, max_multiple: int = 5, full_scan: bool = False
) -> GenerationReport:
    """Scan degrees n, 2n, ..., max_multiple*n and report new generators.

    Degrees not divisible by n carry no invariants (g^2 rescales them by a
    nontrivial root of unity) and are recorded with zero dimensions; with
    ``full_scan`` they are audited against the trace oracle instead of
    skipped.  ``exhausted`` is a heuristic: the top half of the scanned
    range produced no new generators.  The scan alone cannot certify beta.
    """
    if max_multiple < 3:
        raise ValueError("max_multiple must be at least 3")
    if not verify_automorphism(act):
        raise ValueError("the substitution is not an automorphism of this algebra")
    n = act.spec.n
    top = max_multiple * n
    bases: dict[int, list[NcPolynomial]] = {}
    records: list[DegreeRecord] = []
    for d in range(1, top + 1):
        if d % n != 0 and not full_scan:
            bases[d] = []
            records.append(DegreeRecord(d, 0, 0, 0))
            continue
        inv = invariant_basis(act, d)
        if full_scan and invariant_dimension_trace(act, d) != len(inv):
            raise ArithmeticError(
                f"trace oracle disagrees with orbit-sum basis at degree {d}"
            )
        span = product_span(act, d, bases, stop_at=len(inv))
        bases[d] = inv
        records.append(
            DegreeRecord(d, len(inv), span.dimension, len(inv) - span.dimension)
        )
    beta = max((r.degree for r in records if r.new_gens > 0), default=0)
    exhausted = all(r.new_gens == 0 for r in records if 2 * r.degree > top)
    return GenerationReport(
        spec=act.spec, n=n, scanned_degrees=tuple(records), beta=beta,
        exhausted=exhausted,
    )


def product_matrix(
    act: GroupAction,
    d: int,
    basis_d: Sequence[NcPolynomial],
    factors: Mapping[int, Sequence[NcPolynomial]],
) -> Matrix:
    """Products of lower-degree orbit sums, expanded in canonical coordinates.

    One row per ordered pair of factors from ``factors`` whose degrees sum
    to d; each row solves an exact linear system expressing the product in
    the (independent) orbit-sum basis ``basis_d`` of degree d.
    """
    coords = monomial_basis(act.spec, d)
    solver = SpanSolver(
        [b.coordinates(coords) for b in basis_d], len(coords), act.spec.n
    )
    rows: Matrix = []
    for e in sorted(factors):
        if not 0 < e < d or (d - e) not in factors:
            continue
        for p in factors[e]:
            for q in factors[d - e]:
                product = multiply(act.spec, p, q)
                sol = solver.solve(product.coordinates(coords))
                if sol is None:
                    raise ArithmeticError(
                        "product of invariants left the span of the supplied "
                        "degree-%d basis; the basis is wrong" % d
                    )
                rows.append(sol)
    return rows


def rank(matrix: Matrix) -> int:
    """Exact rank over Q(lambda); deterministic first-nonzero pivoting."""
    rows = [r for r in matrix if r]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("matrix rows have uneven lengths")
    return rank_of(rows, width, rows[0][0].n)


def kernel_annihilation(matrix: Matrix, x: Sequence[CycloNum]) -> bool:
    """True iff matrix . x == 0 exactly."""
    for row in matrix:
        if len(row) != len(x):
            raise ValueError("vector length does not match matrix width")
        total = None
        for a, b in zip(row, x):
            term = a * b
            total = term if total is None else total + term
        if total is not None and not total.is_zero():
            return False
    return True
