"""The cyclic group action, Reynolds averaging, orbit sums, invariant bases.

The group is generated by the degree-preserving substitution g with
g.u = v, g.v = lambda*u on the skew ring and g.u = d, g.d = lambda*u on a
down-up algebra; it has order 2n.  Orbit sums follow the two-term
convention m + g.m throughout: an invariant monomial contributes twice
itself, and cancellation to zero is possible and meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cyclo import CycloNum, root_power
from .linalg import EchelonBasis
from .ncalg import (
    SKEW,
    AlgebraSpec,
    Monomial,
    NcPolynomial,
    monomial_basis,
    monomial_degree,
    monomial_word,
    multiply,
)
from .ncalg import _terms_times_letter


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A graded automorphism candidate given by degree-1 generator images."""

    spec: AlgebraSpec
    images: Mapping[str, NcPolynomial]
    order: int
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if set(self.images) != set(self.spec.alphabet):
            raise ValueError("images must cover exactly the generator alphabet")
        for x, img in self.images.items():
            if img.spec != self.spec or img.degree() != 1:
                raise ValueError(f"image of {x} must be homogeneous of degree 1")
        if self.order < 1:
            raise ValueError("order must be positive")


def standard_action(spec: AlgebraSpec) -> GroupAction:
    """The paper's generator: u -> v (resp. d), second generator -> lambda*u."""
    lam = root_power(spec.n, 1)
    if spec.kind == SKEW:
        images = {
            "u": NcPolynomial.monomial(spec, (0, 1)),
            "v": NcPolynomial.monomial(spec, (1, 0), lam),
        }
    else:
        images = {
            "u": NcPolynomial.monomial(spec, (0, 0, 1)),
            "d": NcPolynomial.monomial(spec, (1, 0, 0), lam),
        }
    return GroupAction(spec=spec, images=images, order=2 * spec.n)


def _substitute(spec: AlgebraSpec, images: Mapping[str, NcPolynomial],
                p: NcPolynomial) -> NcPolynomial:
    """Apply the generator substitution to p and reduce to normal form.

    Images are homogeneous of degree 1, so each image term is a scalar times
    a single generator; substitution folds those letters one at a time
    through the cached normal-form tables.
    """
    img_letters: dict[str, list[tuple[str, CycloNum]]] = {}
    for x, img in images.items():
        img_letters[x] = [
            (monomial_word(spec, m), c) for m, c in img._terms.items()
        ]
    unit = (0,) * spec.arity
    out: dict[Monomial, CycloNum] = {}
    for m, c in p._terms.items():
        cur = {unit: c}
        for letter in monomial_word(spec, m):
            nxt: dict[Monomial, CycloNum] = {}
            for target, ic in img_letters[letter]:
                stepped = _terms_times_letter(spec, cur, target)
                for mm, cc in stepped.items():
                    val = cc * ic
                    acc = nxt.get(mm)
                    acc = val if acc is None else acc + val
                    if acc.is_zero():
                        nxt.pop(mm, None)
                    else:
                        nxt[mm] = acc
            cur = nxt
            if not cur:
                break
        for mm, cc in cur.items():
            acc = out.get(mm)
            acc = cc if acc is None else acc + cc
            if acc.is_zero():
                out.pop(mm, None)
            else:
                out[mm] = acc
    return NcPolynomial._raw(spec, out)


def _power_images(act: GroupAction, k: int) -> Mapping[str, NcPolynomial]:
    k %= act.order
    cache = act._cache.setdefault("powers", {})
    if k not in cache:
        if k == 0:
            cache[k] = {
                x: NcPolynomial.monomial(act.spec, m)
                for x, m in zip(act.spec.alphabet, _unit_monomials(act.spec))
            }
        else:
            prev = _power_images(act, k - 1)
            cache[k] = {
                x: _substitute(act.spec, act.images, img) for x, img in prev.items()
            }
    return cache[k]


def _unit_monomials(spec: AlgebraSpec):
    if spec.kind == SKEW:
        return [(1, 0), (0, 1)]
    return [(1, 0, 0), (0, 0, 1)]


def apply_power(act: GroupAction, k: int, p: NcPolynomial) -> NcPolynomial:
    """g^k applied to p: substitution followed by reduction; degree-preserving."""
    if p.spec != act.spec:
        raise ValueError("polynomial does not live in the action's algebra")
    return _substitute(act.spec, _power_images(act, k), p)


def verify_automorphism(act: GroupAction) -> bool:
    """True iff the substitution kills both defining relations after reduction."""
    if "is_auto" not in act._cache:
        spec = act.spec

        def img(m):
            return _substitute(spec, act.images, NcPolynomial.monomial(spec, m))

        if spec.kind == SKEW:
            rel = multiply(spec, img((0, 1)), img((1, 0))) + multiply(
                spec, img((1, 0)), img((0, 1))
            )
            ok = rel.is_zero()
        else:
            iu, idd = img((1, 0, 0)), img((0, 0, 1))
            a = CycloNum.rational(spec.n, spec.alpha)
            b = CycloNum.rational(spec.n, spec.beta_param)
            ddu = multiply(spec, multiply(spec, idd, idd), iu)
            dud = multiply(spec, multiply(spec, idd, iu), idd)
            udd = multiply(spec, multiply(spec, iu, idd), idd)
            duu = multiply(spec, multiply(spec, idd, iu), iu)
            udu = multiply(spec, multiply(spec, iu, idd), iu)
            uud = multiply(spec, multiply(spec, iu, iu), idd)
            r1 = ddu - dud.scale(a) - udd.scale(b)
            r2 = duu - udu.scale(a) - uud.scale(b)
            ok = r1.is_zero() and r2.is_zero()
        act._cache["is_auto"] = ok
    return act._cache["is_auto"]


def _require_automorphism(act: GroupAction) -> None:
    if not verify_automorphism(act):
        raise ValueError("the substitution is not an automorphism of this algebra")


def reynolds(act: GroupAction, p: NcPolynomial) -> NcPolynomial:
    """Group average (1/|G|) sum_k g^k.p; idempotent projection onto invariants."""
    _require_automorphism(act)
    total = NcPolynomial.zero(act.spec)
    for k in range(act.order):
        total = total + apply_power(act, k, p)
    return total.scale(Fraction(1, act.order))


def orbit_sum(act: GroupAction, m: Monomial) -> NcPolynomial:
    """The two-term orbit sum m + g.m of a monomial of invariant-capable degree."""
    deg = monomial_degree(act.spec, m)
    if deg % act.spec.n != 0:
        raise ValueError(
            f"orbit sums exist only in degrees divisible by n={act.spec.n}; "
            f"monomial {m} has degree {deg}"
        )
    pm = NcPolynomial.monomial(act.spec, m)
    return pm + apply_power(act, 1, pm)


def orbit_index_monomials(spec: AlgebraSpec, degree: int) -> list[Monomial]:
    """Monomials whose orbit sums generate the degree, in the canonical
    scan order: i ascending for skew, (l, k) lexicographic for down-up."""
    if spec.kind == SKEW:
        return [(degree - i, i) for i in range(degree // 2 + 1)]
    out = []
    for l in range(degree // 2 + 1):
        for k in range(degree - 2 * l + 1):
            out.append((degree - 2 * l - k, l, k))
    return out


def invariant_basis(act: GroupAction, degree: int) -> list[NcPolynomial]:
    """Echelonized basis of the fixed subspace in one degree.

    Zero orbit sums are discarded and linear dependence removed by exact
    rank reduction over the deterministic monomial order; empty when the
    degree is not a multiple of n (g^2 scales such degrees by a nontrivial
    root of unity).
    """
    _require_automorphism(act)
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree % act.spec.n != 0:
        return []
    basis = monomial_basis(act.spec, degree)
    ech = EchelonBasis(len(basis), act.spec.n)
    for m in orbit_index_monomials(act.spec, degree):
        ech.insert(orbit_sum(act, m).coordinates(basis))
    return [
        NcPolynomial(act.spec, {m: c for m, c in zip(basis, row) if not c.is_zero()})
        for row in ech.rows
    ]


def _content_swaps(act: GroupAction, k: int) -> bool | None:
    """Whether g^k swaps the two generator letter counts; None if unclear.

    Rewriting preserves letter content, so when every generator image is a
    single term, a monomial can only contribute to the trace of g^k if its
    content is preserved by the substitution.
    """
    imgs = _power_images(act, k)
    targets = {}
    for x, img in imgs.items():
        if len(img) != 1:
            return None
        (m, _), = img.items()
        word = monomial_word(act.spec, m)
        if len(word) != 1:
            return None
        targets[x] = word
    a, b = act.spec.alphabet
    if targets[a] == a and targets[b] == b:
        return False
    if targets[a] == b and targets[b] == a:
        return True
    return None


def _letter_counts(spec: AlgebraSpec, m: Monomial) -> tuple[int, int]:
    word = monomial_word(spec, m)
    a, b = spec.alphabet
    return word.count(a), word.count(b)


def invariant_dimension_trace(act: GroupAction, degree: int) -> int:
    """Fixed-subspace dimension by exact trace averaging over the group.

    Independent of the orbit-sum route: computes (1/|G|) sum_k tr(g^k) on
    the degree-d monomial basis in Q(lambda) and checks the average is a
    rational integer.
    """
    _require_automorphism(act)
    basis = monomial_basis(act.spec, degree)
    total = CycloNum.zero(act.spec.n)
    for k in range(act.order):
        swaps = _content_swaps(act, k)
        for m in basis:
            if swaps is not None:
                ca, cb = _letter_counts(act.spec, m)
                if swaps and ca != cb:
                    continue
            image = apply_power(act, k, NcPolynomial.monomial(act.spec, m))
            total = total + image.coefficient(m)
    avg = total * CycloNum.rational(act.spec.n, 1) / act.order
    try:
        q = avg.as_rational()
    except ValueError:
        raise ArithmeticError(
            "trace average is not rational; the action is inconsistent"
        ) from None
    if q.denominator != 1:
        raise ArithmeticError("trace average is not an integer; action bug")
    return int(q)
