"""Symbolic values of non-vanishing ST(lambda) in d^2 variables.

For ``lambda ⊢ d^2`` with ``n`` parts, ``ST(lambda)(x) = det(x) J_lambda`` with
``J_lambda`` in the group algebra of S_n. The pairings ``tr(s^-1 ST(lambda))``
are ``±C_d det(x)`` or zero, so

    J_lambda = C_d * (sum_s eps(s^-1) s) * Wg(d, n),

where ``eps`` is computed combinatorially by :func:`trace_pairing`. The sign
of ``C_d`` is fixed by the canonical ordering
``tr(x_1) tr(x_2 x_3 x_4) tr(x_5 ... x_9) ...`` and is found numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .partitions import (
    Composition,
    Partition,
    all_refinement_groupings,
    cycles_of,
    delta,
)
from .symmetric import (
    CentralElement,
    GroupAlgebraElement,
    Permutation,
    check_degree,
    chi_dim,
    expand_central,
    invert,
    multiply_by_class_function,
    partitions_of,
    schur_dim,
    weingarten_class_values,
)


@dataclass(frozen=True)
class BlockLayout:
    """Consecutive variable blocks: slot ``i`` owns ``blocks[i]`` (0-based variables)."""

    parts: Composition
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Sequence[int]) -> "BlockLayout":
        parts = Composition(parts)
        blocks, start = [], 0
        for a in parts:
            blocks.append(tuple(range(start, start + a)))
            start += a
        return cls(parts, tuple(blocks))


@dataclass(frozen=True)
class TracePairing:
    """``tr(sigma ST(lambda)) = epsilon * T_d(x)``."""

    sigma: Permutation
    epsilon: int
    monomial_lengths: Partition
    words: tuple[tuple[int, ...], ...]


def _positive_composition(lam: Sequence[int]) -> Composition:
    comp = Composition(lam)
    if 0 in comp:
        raise ValueError(
            f"zero parts are not supported symbolically (got {comp}); drop them first"
        )
    return comp


def _word_sign(word: Sequence[int]) -> int:
    # parity of a permutation given in one-line form
    return -1 if (len(word) - len(cycles_of(word))) % 2 else 1


def trace_pairing(sigma: Sequence[int], lam: Sequence[int], d: int) -> TracePairing:
    """Sign relating ``tr(sigma ST(lambda))`` to the canonical trace wedge.

    Each cycle of ``sigma`` yields one trace word: starting from slot ``i`` the
    next slot is ``sigma^-1(i)``. The pairing vanishes unless the word lengths
    are exactly ``2d-1, ..., 3, 1``; otherwise words are rotated to start at
    their smallest variable, sorted by length and concatenated, and the sign
    of the resulting arrangement of ``x_1..x_{d^2}`` is returned.
    """
    comp = _positive_composition(lam)
    sigma = Permutation(sigma)
    if comp.weight != d * d:
        raise ValueError(f"weight {comp.weight} differs from d^2 = {d * d}")
    if len(sigma) != comp.length:
        raise ValueError(f"permutation degree {len(sigma)} does not match {comp.length} parts")
    layout = BlockLayout.of(comp)
    inv = invert(sigma)
    words = []
    for cycle in cycles_of(sigma):
        slot, word = cycle[0], []
        for _ in cycle:
            word.extend(layout.blocks[slot])
            slot = inv[slot]
        words.append(tuple(word))
    lengths = Partition(len(w) for w in words)
    if lengths != delta(d):
        return TracePairing(sigma, 0, lengths, tuple(words))
    rotated = []
    for w in words:
        j = w.index(min(w))
        rotated.append(w[j:] + w[:j])
    rotated.sort(key=len)
    flat = [v for w in rotated for v in w]
    return TracePairing(sigma, _word_sign(flat), lengths, tuple(rotated))


def _cyclic_orders(group: Sequence[int]):
    first, rest = group[0], group[1:]
    for order in itertools.permutations(rest):
        yield (first,) + order


def pairing_support(lam: Sequence[int], d: int):
    """Permutations ``tau`` whose cycles group the parts of ``lam`` into ``delta(d)``.

    Enumerates refinement groupings and all cyclic orders of each group, never
    the whole of S_n.
    """
    comp = _positive_composition(lam)
    n = comp.length
    for groups in all_refinement_groupings(comp, delta(d)):
        for orders in itertools.product(*(_cyclic_orders(g) for g in groups)):
            images = list(range(n))
            for cyc in orders:
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    images[a] = b
            yield Permutation(images)


def phi_of_j(lam: Sequence[int], d: int) -> GroupAlgebraElement:
    """``Phi(J_lambda / C_d) = sum_s eps(s^-1) s`` with ``eps`` from :func:`trace_pairing`."""
    comp = _positive_composition(lam)
    if comp.weight != d * d:
        raise ValueError(f"weight {comp.weight} differs from d^2 = {d * d}")
    terms = {}
    for tau in pairing_support(comp, d):
        eps = trace_pairing(tau, comp, d).epsilon
        if eps:
            terms[invert(tau)] = eps
    return GroupAlgebraElement(comp.length, terms)


def phi_of_j_dense(lam: Sequence[int], d: int, max_degree: Optional[int] = None) -> GroupAlgebraElement:
    """Same as :func:`phi_of_j` but pairing against every permutation of S_n."""
    comp = _positive_composition(lam)
    check_degree(comp.length, max_degree)
    terms = {}
    for s in itertools.permutations(range(comp.length)):
        eps = trace_pairing(invert(s), comp, d).epsilon
        if eps:
            terms[s] = eps
    return GroupAlgebraElement(comp.length, terms)


def c_d_magnitude(d: int) -> int:
    """``1! 3! 5! ... (2d-1)! / (1! 2! ... (d-1)!)``."""
    if d < 1:
        raise ValueError("d must be positive")
    num = math.prod(math.factorial(2 * i - 1) for i in range(1, d + 1))
    den = math.prod(math.factorial(i) for i in range(1, d))
    return num // den


@lru_cache(maxsize=None)
def determine_c_d_sign(d: int, max_d: int = 4) -> Optional[int]:
    """Sign of ``C_d`` under the canonical ordering, or ``None`` when out of budget.

    Evaluates the trace wedge on the lexicographic elementary basis, where
    ``det_vec`` is 1; the magnitude found there is checked against
    :func:`c_d_magnitude`.
    """
    from .oracle import BudgetExceededError, t_wedge_on_elementary_basis

    try:
        value = t_wedge_on_elementary_basis(d, max_d=max_d)
    except BudgetExceededError:
        return None
    if abs(value) != c_d_magnitude(d):
        raise ArithmeticError(
            f"trace wedge on the elementary basis is {value}, expected ±{c_d_magnitude(d)}"
        )
    return 1 if value > 0 else -1


@dataclass(frozen=True)
class JLambda:
    """``J_lambda`` with the (unknown-sign) constant ``C_d`` taken positive.

    ``j = c_d_magnitude * phi_over_c * Wg(d, n)``; the true ``J_lambda`` is
    ``determine_c_d_sign(d) * j``.
    """

    lam: Composition
    d: int
    phi_over_c: GroupAlgebraElement
    j: GroupAlgebraElement
    c_d_magnitude: int

    def signed(self, c_sign: int) -> GroupAlgebraElement:
        if c_sign not in (1, -1):
            raise ValueError("c_sign must be +1 or -1")
        return self.j if c_sign == 1 else -self.j

    def central(self) -> Optional[CentralElement]:
        """Idempotent and class-sum expansions when ``j`` is central."""
        if not self.j.is_central():
            return None
        return expand_central(self.j)


def j_lambda(lam: Sequence[int], d: int, max_degree: Optional[int] = None) -> JLambda:
    comp = _positive_composition(lam)
    check_degree(comp.length, max_degree)
    phi_c = phi_of_j(comp, d)
    mag = c_d_magnitude(d)
    wg = weingarten_class_values(d, comp.length)
    j = multiply_by_class_function(phi_c, wg, max_degree=max_degree).scale(mag)
    return JLambda(comp, d, phi_c, j, mag)


def j_delta_central(d: int) -> CentralElement:
    """``|C_d| (1/d!) sum_{mu ⊢ d} chi_mu(e) / s_mu(1^d) omega_mu`` in both central bases."""
    mag = c_d_magnitude(d)
    dfact = math.factorial(d)
    coeffs = {mu: Fraction(mag * chi_dim(mu), dfact * schur_dim(mu, d))
              for mu in partitions_of(d, max_len=d)}
    return CentralElement.from_omega_coeffs(d, coeffs)


def j_delta(d: int, max_degree: Optional[int] = None) -> JLambda:
    """Closed form for the staircase; agrees with ``j_lambda(delta(d), d)`` up to sign."""
    check_degree(d, max_degree)
    central = j_delta_central(d)
    return JLambda(
        Composition(delta(d)), d, GroupAlgebraElement.identity(d),
        central.to_element(max_degree=max_degree), c_d_magnitude(d),
    )


def swap_tensor_factors(a: Sequence[int], i: int, j: int) -> tuple[Composition, int]:
    """Exchange parts ``i < j`` (1-based) and return the sign of the variable reordering.

    Exchanging the two blocks also moves them past the ``s`` variables in
    between, so the sign is ``(-1)^(a_i a_j + s (a_i + a_j))``; for adjacent
    factors this is ``(-1)^(a_i a_j)``.
    """
    a = Composition(a)
    if not 1 <= i < j <= len(a):
        raise IndexError(f"need 1 <= i < j <= {len(a)}, got i={i}, j={j}")
    parts = list(a)
    parts[i - 1], parts[j - 1] = parts[j - 1], parts[i - 1]
    ai, aj, between = a[i - 1], a[j - 1], sum(a[i:j - 1])
    return Composition(parts), (-1) ** (ai * aj + between * (ai + aj))


def conjugate_by_swap(element: GroupAlgebraElement, i: int, j: int, sign: int) -> GroupAlgebraElement:
    """``sign * (i,j) element (i,j)``: the value for the swapped composition."""
    t = Permutation.from_cycles(element.degree, [(i, j)])
    return element.conjugate(t).scale(sign)


# name used in the mathematical notation
phi_of_J = phi_of_j
