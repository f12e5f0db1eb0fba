import pytest

from ncinv.cyclo import CycloNum, root_power
from ncinv.ncalg import downup_spec, skew_spec
from ncinv.action import orbit_sum, standard_action
from ncinv.formulas import (
    canonical_basis,
    canonical_downup_indices,
    canonical_skew_indices,
    closed_form_product,
    combination_to_polynomial,
    downup_index_pairs,
    kernel_vector,
    normalize_index,
    verify_identity,
)


def test_canonical_skew_indices_drop_zero_orbit_sums():
    # n = 0 mod 4: the middle index at degree n is excluded
    assert canonical_skew_indices(4, 4) == [0, 1]
    assert canonical_skew_indices(8, 8) == [0, 1, 2, 3]
    # n = 2 mod 4: u^{n/2} v^{n/2} is invariant, so the middle index stays
    assert canonical_skew_indices(2, 2) == [0, 1]
    assert canonical_skew_indices(6, 6) == [0, 1, 2, 3]
    # odd n, degree 2n: the middle index cancels
    assert canonical_skew_indices(3, 6) == [0, 1, 2]
    assert canonical_skew_indices(4, 8) == [0, 1, 2, 3, 4]


def test_canonical_sets_match_invariant_dimension():
    for n in (2, 4, 6):
        act = standard_action(downup_spec(0, 1, n))
        assert len(canonical_basis(act, 2 * n)) == len(
            canonical_downup_indices(n, 2 * n)
        )
    with pytest.raises(ValueError):
        canonical_downup_indices(3, 12)


def test_no_zero_orbit_sums_in_canonical_bases():
    for n, degree in [(2, 4), (4, 8), (1, 3), (3, 9)]:
        act = standard_action(downup_spec(0, 1, n))
        for p in canonical_basis(act, degree):
            assert not p.is_zero()
    for n, degree in [(4, 8), (3, 9), (2, 4)]:
        act = standard_action(skew_spec(n))
        for p in canonical_basis(act, degree):
            assert not p.is_zero()


def test_normalize_index_skew():
    one = CycloNum.one(4)
    assert normalize_index("skew", 4, (1, 2)) == (one, (1, 2))
    coeff, idx = normalize_index("skew", 4, (1, 3))  # O(1,3) -> O(3,1)
    assert idx == (1, 1)
    assert coeff == root_power(4, 3) * -1  # (-1)^{1*3} lambda^3
    with pytest.raises(ValueError):
        normalize_index("skew", 4, (1, 5))


def test_normalize_index_downup_3n_formula():
    # O(3n-2l-k, l, k) = lambda^{l+k} O(k, l, 3n-2l-k) when 3n <= 2(l+k)
    n = 3
    raw = (1, 2, 4)  # degree 9, l+k = 6, 2*6 >= 9
    coeff, idx = normalize_index("downup-3n", n, raw)
    assert idx == (4, 2, 1)
    assert coeff == root_power(n, 6)
    # engine agreement
    act = standard_action(downup_spec(0, 1, n))
    assert orbit_sum(act, raw) == orbit_sum(act, idx).scale(coeff)


def test_normalize_index_downup_2n_branches():
    n = 2
    act = standard_action(downup_spec(0, 1, n))
    # k even, l != 0 branch of the switching formula
    raw = (0, 1, 2)  # degree 4 = 2n, l+k = 3 > n
    coeff, idx = normalize_index("downup-2n", n, raw)
    assert coeff == root_power(n, 3)
    assert idx == (3, 0, 1)
    assert orbit_sum(act, raw) == orbit_sum(act, idx).scale(coeff)
    # k even, l = 0 branch
    raw = (0, 0, 4)  # (l, k) = (0, 4)
    coeff, idx = normalize_index("downup-2n", n, raw)
    assert idx == (4, 0, 0) and coeff.is_one()  # lambda^4 = 1 at n = 2
    assert orbit_sum(act, raw) == orbit_sum(act, idx).scale(coeff)
    raw = (1, 1, 1)  # (l, k) = (1, 1): k odd branch
    coeff, idx = normalize_index("downup-2n", n, raw)
    assert idx == (0, 2, 0)
    assert coeff == root_power(n, 2)
    assert orbit_sum(act, raw) == orbit_sum(act, idx).scale(coeff)


def test_normalize_index_idempotent_and_degree_preserving():
    n = 3
    for (l, k) in downup_index_pairs(3 * n):
        raw = (3 * n - 2 * l - k, l, k)
        coeff, idx = normalize_index("downup-3n", n, raw)
        assert sum((idx[0], 2 * idx[1], idx[2])) == 3 * n
        c2, idx2 = normalize_index("downup-3n", n, idx)
        assert idx2 == idx and c2.is_one()
        # the relating coefficient is a power of lambda
        assert any(coeff == root_power(n, e) for e in range(n))
    with pytest.raises(ValueError):
        normalize_index("downup-3n", 3, (1, 1, 1))


def test_closed_form_product_structure():
    # Eq at i = j = 0: O(n,0)^2 = O(2n,0) + O(n,n)
    comb = closed_form_product("skew-nn", 4, 0, 0)
    assert {idx for _, idx in comb} == {(2, 0), (2, 4)}
    assert all(c.is_one() for c, _ in comb)


def test_closed_form_sign_swap_between_orders():
    # the two product orders differ exactly by a sign when i is odd
    n = 3
    for i in (1, 3):
        for j in (0, 1):
            left = closed_form_product("skew-2n-n-left", n, i, j)
            right = closed_form_product("skew-2n-n-right", n, j, i)
            flipped = [(c.__neg__(), idx) for c, idx in right]
            assert sorted(repr(t) for t in left) == sorted(repr(t) for t in flipped)
    # and coincide when i is even (the degree-2n factor is central)
    act = standard_action(skew_spec(n))
    for i in (0, 2):
        for j in (0, 1):
            l = combination_to_polynomial(act, closed_form_product("skew-2n-n-left", n, i, j))
            r = combination_to_polynomial(act, closed_form_product("skew-2n-n-right", n, j, i))
            assert l == r


def test_closed_form_hypothesis_errors():
    with pytest.raises(ValueError, match="hypothesis"):
        closed_form_product("skew-nn", 3, 0, 0)  # n odd
    with pytest.raises(ValueError, match="hypothesis"):
        closed_form_product("skew-nn", 4, 2, 0)  # i = n/2 outside the statement
    with pytest.raises(ValueError, match="hypothesis"):
        closed_form_product("downup-nn", 3, (0, 0), (0, 0))
    with pytest.raises(ValueError, match="hypothesis"):
        closed_form_product("downup-n-2n", 3, (0, 4), (0, 0))
    with pytest.raises(ValueError):
        closed_form_product("nope", 3, 0, 0)


def test_kernel_vector_skew_even_n4_values():
    x = kernel_vector("skew-even", 4)
    lam = root_power(4, 1)
    assert x[0] == CycloNum.one(4)
    assert x[1] == -lam
    assert x[2] == -lam
    assert x[3] == lam * lam
    # the full canonical degree-2n basis has n+1 coordinates
    assert len(x) == 5
    assert x[4] == lam * lam


def test_kernel_vector_downup_even_n2_entries_are_signs():
    for entry in kernel_vector("downup-even", 2):
        assert entry == CycloNum.one(2) or entry == CycloNum.rational(2, -1)


def test_kernel_vector_skew_odd_nonzero():
    x = kernel_vector("skew-odd", 3)
    act = standard_action(skew_spec(3))
    assert len(x) == len(canonical_basis(act, 9))
    assert all(not c.is_zero() for c in x)


def test_kernel_vector_parity_errors():
    with pytest.raises(ValueError):
        kernel_vector("skew-even", 6)  # 6 = 2 mod 4: no certificate exists
    with pytest.raises(ValueError):
        kernel_vector("skew-odd", 4)
    with pytest.raises(ValueError):
        kernel_vector("downup-even", 3)
    with pytest.raises(ValueError):
        kernel_vector("downup-odd", 2)


@pytest.mark.parametrize(
    "target,n",
    [
        ("prop-invar", 2),
        ("prop-invar", 5),
        ("eq-4n", 2),
        ("eq-4n", 6),
        ("lemma-multi", 3),
        ("prop-even-products", 2),
        ("prop-even-products", 4),
        ("prop-odd-products", 1),
        ("prop-odd-products", 3),
        ("normalize-2n", 4),
        ("normalize-3n", 3),
    ],
)
def test_verify_identity_formula_targets(target, n):
    report = verify_identity(target, n)
    assert report["failures"] == []
    assert report["checked"] > 0
    assert set(report) == {"target", "n", "kind", "checked", "failures"}


@pytest.mark.parametrize(
    "target,n,kind",
    [
        ("kernel-2n", 4, "skew"),
        ("kernel-3n", 3, "skew"),
        ("kernel-2n", 2, "downup"),
        ("kernel-3n", 1, "downup"),
        ("kernel-3n", 3, "downup"),
    ],
)
def test_verify_identity_kernel_targets(target, n, kind):
    report = verify_identity(target, n, kind)
    assert report["failures"] == []


def test_verify_identity_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_identity("eq-4n", 3)
    with pytest.raises(ValueError):
        verify_identity("kernel-2n", 6, "skew")  # stated only for n = 0 mod 4
    with pytest.raises(ValueError):
        verify_identity("made-up-target", 2)
