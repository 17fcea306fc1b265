
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tensorpi.oracle import (
    DEFAULT_PRIME,
    BudgetExceededError,
    certify,
    det_vec,
    elementary_basis,
    eval_group_algebra,
    evaluate_st,
    evaluate_t_wedge,
    inverse_mod,
    kron,
    matmul,
    permutation_operator,
    random_invertible,
    random_matrices,
    reduce,
    report_json,
    standard_polynomial,
    t_wedge_on_elementary_basis,
    tensor_power,
)
from tensorpi.symmetric import Permutation, parse_element

P = DEFAULT_PRIME


def rng(seed=0):
    return np.random.default_rng(seed)


def test_matmul_matches_python_ints():
    a, b = random_matrices(2, 4, P, rng())
    exact = (a.astype(object) @ b.astype(object)) % P
    assert np.array_equal(matmul(a, b, P), exact.astype(np.int64))


def test_det_vec_of_basis():
    assert det_vec(elementary_basis(2, None), None) == 1
    assert det_vec(elementary_basis(3, P), P) == 1


def test_det_vec_conjugation_invariant():
    r = rng(3)
    xs = random_matrices(9, 3, P, r)
    g = random_invertible(3, P, r)
    gi = inverse_mod(g, P)
    ys = [matmul(matmul(g, x, P), gi, P) for x in xs]
    assert det_vec(ys, P) == det_vec(xs, P)


def test_cycle_operator_gives_trace_of_product():
    r = rng(1)
    for k in (2, 3, 4):
        xs = random_matrices(k, 2, None, r)
        cycle = Permutation.from_cycles(k, [tuple(range(k, 0, -1))])
        op = permutation_operator(cycle, 2, None)
        tensor = xs[0]
        for x in xs[1:]:
            tensor = kron(tensor, x, None)
        prod = xs[0]
        for x in xs[1:]:
            prod = prod.dot(x)
        assert np.trace(op.dot(tensor)) == np.trace(prod)


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(3)), st.permutations(range(3)))
def test_permutation_operator_is_homomorphism(p, q):
    p, q = Permutation(p), Permutation(q)
    lhs = permutation_operator(p * q, 2, P)
    rhs = matmul(permutation_operator(p, 2, P), permutation_operator(q, 2, P), P)
    assert np.array_equal(lhs, rhs)


def test_eval_group_algebra_multiplicative():
    a = parse_element("2() - (1,2) + 1/3(1,2,3)", 3)
    b = parse_element("(2,3) + 5(1,3,2)", 3)
    lhs = eval_group_algebra(a * b, 2, P)
    rhs = matmul(eval_group_algebra(a, 2, P), eval_group_algebra(b, 2, P), P)
    assert np.array_equal(lhs, rhs)


def test_amitsur_levitzki():
    for d in (1, 2, 3):
        xs = random_matrices(2 * d, d, P, rng(d))
        assert not standard_polynomial(xs, P).any()
        assert standard_polynomial(xs[:-1], P).any()


@pytest.mark.parametrize("a", [(3, 2, 1), (2, 0, 2, 2), (1, 1, 1, 1, 1, 1), (6,), (1, 3, 2)])
def test_methods_agree(a):
    xs = random_matrices(sum(a), 2, P, rng(sum(a)))
    young = evaluate_st(a, xs, P, method="young")
    assert np.array_equal(young, evaluate_st(a, xs, P, method="dfs"))
    assert np.array_equal(young, evaluate_st(a, xs, P, method="naive"))


def test_exact_mode_matches_modular():
    xs = random_matrices(4, 2, None, rng(7))
    exact = evaluate_st((2, 1, 1), xs, None)
    modular = evaluate_st((2, 1, 1), [x.astype(np.int64) % P for x in xs], P)
    assert np.array_equal(reduce(exact.astype(object), P).astype(np.int64), modular)


def test_variable_cap():
    with pytest.raises(BudgetExceededError):
        evaluate_st((13,), random_matrices(13, 2, P, rng()), P)


def test_weight_mismatch():
    with pytest.raises(ValueError):
        evaluate_st((2, 1), random_matrices(2, 2, P, rng()), P)


comps = st.lists(st.integers(0, 3), min_size=1, max_size=3).filter(lambda a: 1 < sum(a) <= 6)


@settings(max_examples=15, deadline=None)
@given(comps, st.integers(1, 3), st.integers(0, 10**6), st.data())
def test_antisymmetry(a, d, seed, data):
    k = sum(a)
    xs = random_matrices(k, d, P, rng(seed))
    i, j = sorted(data.draw(st.lists(st.integers(0, k - 1), min_size=2, max_size=2, unique=True)))
    swapped = list(xs)
    swapped[i], swapped[j] = xs[j], xs[i]
    base = evaluate_st(a, xs, P)
    assert np.array_equal(evaluate_st(a, swapped, P), reduce(-base, P))
    repeated = list(xs)
    repeated[j] = xs[i]
    assert not evaluate_st(a, repeated, P).any()


@settings(max_examples=15, deadline=None)
@given(comps, st.integers(1, 3), st.integers(0, 10**6), st.integers(0, P - 1), st.data())
def test_multilinearity(a, d, seed, c, data):
    k = sum(a)
    r = rng(seed)
    xs = random_matrices(k, d, P, r)
    y = random_matrices(1, d, P, r)[0]
    i = data.draw(st.integers(0, k - 1))
    mixed = list(xs)
    mixed[i] = reduce(c * xs[i] + y, P)
    other = list(xs)
    other[i] = y
    lhs = evaluate_st(a, mixed, P)
    rhs = reduce(c * evaluate_st(a, xs, P) + evaluate_st(a, other, P), P)
    assert np.array_equal(lhs, rhs)


@settings(max_examples=10, deadline=None)
@given(comps, st.integers(1, 3), st.integers(0, 10**6))
def test_conjugation_equivariance(a, d, seed):
    r = rng(seed)
    xs = random_matrices(sum(a), d, P, r)
    g = random_invertible(d, P, r)
    gi = inverse_mod(g, P)
    ys = [matmul(matmul(g, x, P), gi, P) for x in xs]
    n = len(a)
    big, big_inv = tensor_power(g, n, P), tensor_power(gi, n, P)
    lhs = evaluate_st(a, ys, P)
    rhs = matmul(matmul(big, evaluate_st(a, xs, P), P), big_inv, P)
    assert np.array_equal(lhs, rhs)


def test_t_wedge_ratio():
    for d, c in ((2, -6), (3, 360)):
        xs = random_matrices(d * d, d, P, rng(d))
        value = evaluate_t_wedge(d, xs, P)
        assert value == c * int(det_vec(xs, P)) % P


def test_t_wedge_budget():
    with pytest.raises(BudgetExceededError):
        evaluate_t_wedge(5, random_matrices(25, 5, P, rng()), P)
    with pytest.raises(BudgetExceededError):
        t_wedge_on_elementary_basis(5)


def test_elementary_wedge_values():
    assert [t_wedge_on_elementary_basis(d) for d in (1, 2, 3)] == [1, -6, 360]


def test_certify_identity_and_nonzero():
    report = certify((2, 2), 2, trials=10)
    assert report["verdict"] == "identity" and report["max_residue"] == 0
    assert certify((2, 1), 2, trials=5)["verdict"] == "nonzero"
    assert certify((3, 1), 2, trials=5)["verdict"] == "equality"


def test_certify_is_deterministic():
    a = certify((2, 1, 1), 2, trials=5, seed=3)
    b = certify((2, 1, 1), 2, trials=5, seed=3)
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert report_json(a) == report_json(b)


def test_certify_budget():
    with pytest.raises(BudgetExceededError):
        certify((1,) * 16, 4, trials=1)
