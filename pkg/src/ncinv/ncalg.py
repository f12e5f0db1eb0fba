"""Words, rewriting to normal form, and graded monomial bases.

Two algebra families are supported: the skew polynomial ring k_{-1}[u,v]
with vu = -uv, and the graded down-up algebras A(alpha, beta) on u, d with

    d d u = alpha * d u d + beta * u d d
    d u u = alpha * u d u + beta * u u d

Normal monomials are u^a v^b (skew) and u^a (du)^b d^c (down-up); both rule
sets strictly decrease the number of inversions (later letters that must
move left), so rewriting terminates.  Confluence is enforced by property
tests rather than proven here.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .cyclo import CycloNum

SKEW = "skew"
DOWNUP = "downup"

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class AlgebraSpec:
    """Which algebra we are in, plus the order n of the intended root of unity."""

    kind: str
    n: int
    alpha: Fraction = Fraction(0)
    beta_param: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in (SKEW, DOWNUP):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta_param", Fraction(self.beta_param))
        if self.kind == DOWNUP and self.beta_param == 0:
            raise ValueError(
                "down-up algebras require beta != 0 (the noetherian/AS-regular case)"
            )

    @property
    def alphabet(self) -> str:
        return "uv" if self.kind == SKEW else "ud"

    @property
    def arity(self) -> int:
        return 2 if self.kind == SKEW else 3

    def to_json(self) -> dict:
        if self.kind == SKEW:
            return {"kind": self.kind, "n": self.n}
        return {
            "kind": self.kind,
            "alpha": str(self.alpha),
            "beta": str(self.beta_param),
            "n": self.n,
        }

    @staticmethod
    def from_json(data: dict) -> "AlgebraSpec":
        if data["kind"] == SKEW:
            return skew_spec(int(data["n"]))
        return downup_spec(Fraction(data["alpha"]), Fraction(data["beta"]), int(data["n"]))


def skew_spec(n: int) -> AlgebraSpec:
    return AlgebraSpec(SKEW, n)


def downup_spec(alpha, beta, n: int) -> AlgebraSpec:
    return AlgebraSpec(DOWNUP, n, Fraction(alpha), Fraction(beta))


# ---------------------------------------------------------------------------
# monomials and words
# ---------------------------------------------------------------------------

def monomial_degree(spec: AlgebraSpec, m: Monomial) -> int:
    if spec.kind == SKEW:
        return m[0] + m[1]
    return m[0] + 2 * m[1] + m[2]


def monomial_word(spec: AlgebraSpec, m: Monomial) -> str:
    if spec.kind == SKEW:
        return "u" * m[0] + "v" * m[1]
    return "u" * m[0] + "du" * m[1] + "d" * m[2]


def check_monomial(spec: AlgebraSpec, m: Monomial) -> None:
    if len(m) != spec.arity or any(e < 0 for e in m):
        raise ValueError(f"{m} is not a valid {spec.kind} monomial")


def _parse_normal_word(spec: AlgebraSpec, w: str) -> Monomial:
    """Inverse of monomial_word on words already in normal form."""
    if spec.kind == SKEW:
        a = len(w) - len(w.lstrip("u"))
        return (a, len(w) - a)
    a = len(w) - len(w.lstrip("u"))
    i, b = a, 0
    while w[i : i + 2] == "du":
        b += 1
        i += 2
    return (a, b, len(w) - i)


def monomial_basis(spec: AlgebraSpec, degree: int) -> list[Monomial]:
    """All normal monomials of the given degree, u-exponent descending then
    du-exponent descending."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if spec.kind == SKEW:
        return [(a, degree - a) for a in range(degree, -1, -1)]
    out = []
    for a in range(degree, -1, -1):
        for b in range((degree - a) // 2, -1, -1):
            out.append((a, b, degree - a - 2 * b))
    return out


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

def _find_redex(spec: AlgebraSpec, w: str, strategy: str) -> int:
    if spec.kind == SKEW:
        return w.find("vu") if strategy == "leftmost" else w.rfind("vu")
    rng = range(len(w) - 2) if strategy == "leftmost" else range(len(w) - 3, -1, -1)
    for i in rng:
        if w[i] == "d" and (w[i : i + 3] == "ddu" or w[i : i + 3] == "duu"):
            return i
    return -1


def _rewrite_at(spec: AlgebraSpec, w: str, i: int) -> list[tuple[Fraction, str]]:
    if spec.kind == SKEW:
        return [(Fraction(-1), w[:i] + "uv" + w[i + 2 :])]
    ddu = w[i : i + 3] == "ddu"  # else the redex is duu
    out = []
    if spec.alpha:
        out.append((spec.alpha, w[:i] + ("dud" if ddu else "udu") + w[i + 3 :]))
    out.append((spec.beta_param, w[:i] + ("udd" if ddu else "uud") + w[i + 3 :]))
    return out


def _rewrite_word(spec: AlgebraSpec, word: str, strategy: str) -> dict[str, CycloNum]:
    """Fully rewrite one free word; returns normal words with coefficients."""
    n = spec.n
    pending: dict[str, CycloNum] = {word: CycloNum.one(n)}
    done: dict[str, CycloNum] = {}
    while pending:
        w, c = pending.popitem()
        i = _find_redex(spec, w, strategy)
        if i < 0:
            acc = done.get(w)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                done.pop(w, None)
            else:
                done[w] = acc
            continue
        for q, w2 in _rewrite_at(spec, w, i):
            c2 = c * q
            prev = pending.get(w2)
            tot = c2 if prev is None else prev + c2
            if tot.is_zero():
                pending.pop(w2, None)
            else:
                pending[w2] = tot
    return done


def reduce_word(spec: AlgebraSpec, word: str, strategy: str = "leftmost") -> "NcPolynomial":
    """Normal form of a free word as an NcPolynomial.

    The result is independent of the rewriting strategy; ``strategy`` is
    exposed so the confluence property tests can compare orders.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    bad = set(word) - set(spec.alphabet)
    if bad:
        raise ValueError(f"letters {sorted(bad)} not in alphabet {spec.alphabet!r}")
    terms = {
        _parse_normal_word(spec, w): c
        for w, c in _rewrite_word(spec, word, strategy).items()
    }
    return NcPolynomial(spec, terms)


def _merge_scaled(out: dict, terms, factor: CycloNum) -> None:
    if factor.is_zero():
        return
    for m, c in (terms.items() if isinstance(terms, dict) else terms):
        val = c * factor
        acc = out.get(m)
        acc = val if acc is None else acc + val
        if acc.is_zero():
            out.pop(m, None)
        else:
            out[m] = acc


@functools.lru_cache(maxsize=None)
def _letter_product(spec: AlgebraSpec, m: Monomial, letter: str) -> tuple[tuple[Monomial, CycloNum], ...]:
    """Normal form of (normal monomial) * (single generator), cached.

    Only the rightmost redex can involve the appended generator, so one
    rule application plus recursion on strictly smaller tail exponents
    normalizes the product without any word-level search.
    """
    one = CycloNum.one(spec.n)
    if spec.kind == SKEW:
        a, b = m
        if letter == "v":
            return (((a, b + 1), one),)
        # u commutes past b copies of v at the cost of (-1)^b
        return (((a + 1, b), CycloNum.rational(spec.n, -1 if b % 2 else 1)),)
    a, b, c = m
    if letter == "d":
        return (((a, b, c + 1), one),)
    if c == 0 and b == 0:
        return (((a + 1, 0, 0), one),)
    if c == 1:
        return (((a, b + 1, 0), one),)  # u^a (du)^b d u = u^a (du)^{b+1}
    if c == 0:
        prefix, words = (a, b - 1, 0), ("udu", "uud")  # trailing duu rewritten
    else:
        prefix, words = (a, b, c - 2), ("dud", "udd")  # trailing ddu rewritten
    alpha = CycloNum.rational(spec.n, spec.alpha)
    beta = CycloNum.rational(spec.n, spec.beta_param)
    out: dict[Monomial, CycloNum] = {}
    for coeff, tail in zip((alpha, beta), words):
        if coeff.is_zero():
            continue
        terms = {prefix: one}
        for x in tail:
            terms = _terms_times_letter(spec, terms, x)
        _merge_scaled(out, terms, coeff)
    return tuple(sorted(out.items(), key=lambda t: tuple(-e for e in t[0])))


def _terms_times_letter(spec, terms: dict, letter: str) -> dict:
    out: dict[Monomial, CycloNum] = {}
    for m, c in terms.items():
        for m2, q in _letter_product(spec, m, letter):
            acc = out.get(m2)
            acc = c * q if acc is None else acc + c * q
            if acc.is_zero():
                out.pop(m2, None)
            else:
                out[m2] = acc
    return out


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class NcPolynomial:
    """A finite map from normal monomials to nonzero Q(lambda) scalars."""

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: AlgebraSpec, terms: Mapping[Monomial, CycloNum] = ()):
        data = {}
        for m, c in (terms.items() if isinstance(terms, Mapping) else terms):
            check_monomial(spec, m)
            if not c.is_zero():
                data[m] = c
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, *_):
        raise AttributeError("NcPolynomial is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def _raw(cls, spec: AlgebraSpec, terms: dict) -> "NcPolynomial":
        """Wrap an already-clean term dict (no zero coefficients) untouched."""
        poly = cls.__new__(cls)
        object.__setattr__(poly, "spec", spec)
        object.__setattr__(poly, "_terms", terms)
        return poly

    @staticmethod
    def zero(spec: AlgebraSpec) -> "NcPolynomial":
        return NcPolynomial(spec)

    @staticmethod
    def one(spec: AlgebraSpec) -> "NcPolynomial":
        return NcPolynomial.monomial(spec, (0,) * spec.arity)

    @staticmethod
    def monomial(spec: AlgebraSpec, m: Monomial, coeff=1) -> "NcPolynomial":
        c = coeff if isinstance(coeff, CycloNum) else CycloNum.rational(spec.n, coeff)
        return NcPolynomial(spec, {tuple(m): c})

    # -- inspection ------------------------------------------------------

    def items(self) -> list[tuple[Monomial, CycloNum]]:
        """Terms in the deterministic order (exponents descending)."""
        return sorted(self._terms.items(), key=lambda t: tuple(-e for e in t[0]))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: Monomial) -> CycloNum:
        return self._terms.get(tuple(m), CycloNum.zero(self.spec.n))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int | None:
        """Total degree if homogeneous, None for 0; error on mixed degrees."""
        degs = {monomial_degree(self.spec, m) for m in self._terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return self.spec == other.spec and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        names = self.spec.alphabet
        bits = []
        for m, c in self.items():
            if self.spec.kind == SKEW:
                word = f"u^{m[0]} v^{m[1]}"
            else:
                word = f"u^{m[0]} (du)^{m[1]} d^{m[2]}"
            bits.append(f"({c!r})*{word}")
        return " + ".join(bits)

    # -- linear structure --------------------------------------------------

    def _check_same(self, other: "NcPolynomial") -> None:
        if self.spec != other.spec:
            raise ValueError("operands live in different algebras")

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        self._check_same(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(m, None)
            else:
                out[m] = acc
        return NcPolynomial._raw(self.spec, out)

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-other)

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial._raw(self.spec, {m: -c for m, c in self._terms.items()})

    def scale(self, c) -> "NcPolynomial":
        c = c if isinstance(c, CycloNum) else CycloNum.rational(self.spec.n, c)
        if c.is_zero():
            return NcPolynomial.zero(self.spec)
        return NcPolynomial._raw(self.spec, {m: c * q for m, q in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            return multiply(self.spec, self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)  # scalars commute with everything

    # -- coordinates / serialization ---------------------------------------

    def coordinates(self, basis: list[Monomial]) -> list[CycloNum]:
        """Coefficient vector over an explicit monomial basis."""
        vec = [self.coefficient(m) for m in basis]
        missing = set(self._terms) - set(basis)
        if missing:
            raise ValueError(f"monomials {sorted(missing)} outside the basis")
        return vec

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "terms": [
                {"monomial": list(m), "coeff": c.to_json()} for m, c in self.items()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "NcPolynomial":
        spec = AlgebraSpec.from_json(data["spec"])
        return NcPolynomial(
            spec,
            {
                tuple(t["monomial"]): CycloNum.from_json(t["coeff"])
                for t in data["terms"]
            },
        )


def multiply(spec: AlgebraSpec, p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    """Product in the algebra: concatenate words, then reduce to normal form.

    Implemented by folding the right factor one generator at a time through
    cached monomial-times-generator tables, which keeps every intermediate
    in normal form.
    """
    if p.spec != spec or q.spec != spec:
        raise ValueError("operands live in different algebras")
    out: dict[Monomial, CycloNum] = {}
    for m2, c2 in q._terms.items():
        cur = {m1: c1 * c2 for m1, c1 in p._terms.items()}
        for letter in monomial_word(spec, m2):
            if not cur:
                break
            cur = _terms_times_letter(spec, cur, letter)
        for m, c in cur.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if acc.is_zero():
                out.pop(m, None)
            else:
                out[m] = acc
    return NcPolynomial._raw(spec, out)
