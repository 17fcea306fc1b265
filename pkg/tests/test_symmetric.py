import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tensorpi.partitions import Partition, partitions_of
from tensorpi.symmetric import (
    CentralElement,
    DegreeCapError,
    GroupAlgebraElement,
    Permutation,
    chi_dim,
    class_size,
    class_sum,
    expand_central,
    mn_character,
    omega,
    parse_element,
    permutations,
    phi,
    schur_dim,
    tr_d,
    weingarten,
    weingarten_class_values,
)


def perms(n):
    return st.permutations(range(n)).map(Permutation)


def random_element(n):
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.dictionaries(perms(n), coeff, max_size=4).map(
        lambda t: GroupAlgebraElement(n, t))


def test_composition_convention():
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    # (pq)(i) = p(q(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert (p * q).one_line() == [2, 3, 1]
    assert str(p * q) == "(1,2,3)"
    assert str(Permutation.identity(3)) == "()"


def test_parse_and_format_round_trip():
    a = parse_element("2() - (1,2) + 1/2(1,3)(2,4)", 4)
    assert a[Permutation.identity(4)] == 2
    assert a["(1,3)(2,4)"] == Fraction(1, 2)
    assert parse_element(str(a), 4) == a
    b = parse_element("1/2[(1,2) - (2,3)]", 3)
    assert b["(2,3)"] == Fraction(-1, 2)


@settings(max_examples=40, deadline=None)
@given(random_element(4))
def test_json_round_trip(a):
    assert GroupAlgebraElement.from_json(a.to_json()) == a


@settings(max_examples=40, deadline=None)
@given(random_element(3), random_element(3), random_element(3))
def test_algebra_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * GroupAlgebraElement.identity(3) == a


def test_sign_and_cycle_type():
    p = Permutation.from_cycles(5, [(1, 2, 3), (4, 5)])
    assert p.cycle_type() == (3, 2)
    assert p.sign() == -1
    assert p.inverse() * p == Permutation.identity(5)


def test_hook_length_dimensions():
    assert chi_dim(Partition([2, 1])) == 2
    assert chi_dim(Partition([3, 2])) == 5
    assert schur_dim(Partition([2, 1]), 2) == 2
    assert schur_dim(Partition([1, 1, 1]), 2) == 0
    assert schur_dim(Partition([3]), 3) == 10


def test_character_values():
    assert mn_character(Partition([2, 1]), Partition([3])) == -1
    assert mn_character(Partition([2, 1]), Partition([2, 1])) == 0
    assert mn_character(Partition([2, 2]), Partition([2, 2])) == 2
    assert mn_character(Partition([1, 1, 1]), Partition([2, 1])) == -1


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    shapes = list(partitions_of(n))
    for lam in shapes:
        for mu in shapes:
            total = sum(class_size(rho) * mn_character(lam, rho) * mn_character(mu, rho)
                        for rho in shapes)
            assert total == (math.factorial(n) if lam == mu else 0)


def test_class_sizes_sum():
    for n in range(1, 8):
        assert sum(class_size(rho) for rho in partitions_of(n)) == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_orthogonal_idempotents(n):
    shapes = list(partitions_of(n))
    idem = {mu: omega(mu) for mu in shapes}
    total = GroupAlgebraElement.zero(n)
    for mu in shapes:
        total = total + idem[mu]
        assert idem[mu].is_central()
    assert total == GroupAlgebraElement.identity(n)
    for i, mu in enumerate(shapes):
        for nu in shapes[i:]:
            prod = idem[mu] * idem[nu]
            assert prod == (idem[mu] if mu == nu else GroupAlgebraElement.zero(n))


@pytest.mark.parametrize("d", range(1, 5))
def test_trace_of_omega(d):
    for n in range(1, 5):
        for mu in partitions_of(n):
            assert tr_d(omega(mu), d) == chi_dim(mu) * schur_dim(mu, d)


@pytest.mark.parametrize("d,n", [(d, n) for d in range(1, 5) for n in range(1, d + 1)])
def test_weingarten_inverts_phi_one(d, n):
    phi_one = phi(GroupAlgebraElement.identity(n), d)
    assert weingarten(d, n) * phi_one == GroupAlgebraElement.identity(n)


def test_weingarten_small_values():
    # Wg(2,2) = (1/3) e - (1/6) (1,2)
    wg = weingarten(2, 2)
    assert wg[Permutation.identity(2)] == Fraction(1, 3)
    assert wg["(1,2)"] == Fraction(-1, 6)


def test_weingarten_degree_cap():
    with pytest.raises(DegreeCapError):
        weingarten(4, 16)
    # class values stay available without expansion
    assert len(weingarten_class_values(4, 16)) == len(list(partitions_of(16)))


@settings(max_examples=15, deadline=None)
@given(st.dictionaries(st.sampled_from(list(partitions_of(4))),
                       st.integers(-3, 3), min_size=1), st.integers(1, 3))
def test_phi_of_central_is_multiplication(coeffs, d):
    a = CentralElement.from_class_coeffs(4, coeffs).to_element()
    assert phi(a, d) == a * phi(GroupAlgebraElement.identity(4), d)


def test_expand_central_round_trip():
    a = class_sum(Partition([2, 1])) + class_sum(Partition([3])).scale(2)
    c = expand_central(a)
    assert c.class_coeffs[Partition([3])] == 2
    assert CentralElement.from_omega_coeffs(3, c.omega_coeffs).to_element() == a


def test_expand_central_rejects_noncentral():
    with pytest.raises(ValueError, match="conjugate"):
        expand_central(parse_element("(1,2)", 3))


def test_permutations_count():
    assert sum(1 for _ in permutations(5)) == 120
