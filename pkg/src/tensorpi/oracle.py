"""Brute-force evaluation of alternating tensor polynomials on explicit matrices.

All arithmetic is over ``Z/pZ`` with numpy ``int64`` arrays, or over the
integers/rationals with ``dtype=object`` arrays when ``p is None``. The prime
must stay below ``2**30`` so that a product of two residues, and a sum of a
few of them, fits in a signed 64-bit integer.

A polynomial identity over Q vanishes modulo every prime, and a non-zero
residue at an integer evaluation point certifies a non-zero value over Q.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from .partitions import Composition
from .symmetric import GroupAlgebraElement, invert

#: Largest prime below 2**30; fixed so that reports are reproducible.
DEFAULT_PRIME = 1_073_741_789
PRIME_ENV = "TENSORPI_PRIME"

#: Hard cap on the number of alternated variables.
MAX_VARIABLES = 12

_LO_BITS = 15
_LO_MASK = (1 << _LO_BITS) - 1


class BudgetExceededError(RuntimeError):
    """An evaluation would exceed the enumeration budget."""


def default_prime() -> int:
    return int(os.environ.get(PRIME_ENV, DEFAULT_PRIME))


def _check_prime(p: Optional[int]) -> None:
    if p is not None and not (2 < p < (1 << 30)):
        raise ValueError(f"prime must satisfy 2 < p < 2**30, got {p}")


# ------------------------------------------------------------------ arithmetic


def reduce(a: np.ndarray, p: Optional[int]) -> np.ndarray:
    return a if p is None else np.mod(a, p)


def matmul(a: np.ndarray, b: np.ndarray, p: Optional[int]) -> np.ndarray:
    """Matrix product mod ``p``; ``b`` is split into 15-bit limbs to avoid overflow."""
    if p is None:
        return a.dot(b)
    lo = a @ (b & _LO_MASK)
    hi = np.mod(a @ (b >> _LO_BITS), p)
    return np.mod(np.mod(lo, p) + np.mod(hi << _LO_BITS, p), p)


def kron(a: np.ndarray, b: np.ndarray, p: Optional[int]) -> np.ndarray:
    return reduce(np.kron(a, b), p)


def identity(size: int, p: Optional[int]) -> np.ndarray:
    if p is None:
        out = np.zeros((size, size), dtype=object)
        for i in range(size):
            out[i, i] = 1
        return out
    return np.eye(size, dtype=np.int64)


def as_field(a, p: Optional[int]) -> np.ndarray:
    """Coerce an integer array into the working representation."""
    if p is None:
        return np.array(a, dtype=object)
    return np.mod(np.array(a, dtype=object), p).astype(np.int64)


def centered(a: np.ndarray, p: Optional[int]) -> np.ndarray:
    """Representatives in ``(-p/2, p/2]`` (identity in exact mode)."""
    if p is None:
        return a
    a = np.mod(a, p)
    return np.where(a > p // 2, a - p, a)


def max_abs(a: np.ndarray, p: Optional[int]) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(x) for x in centered(a, p).ravel()))


def random_matrices(
    count: int, d: int, p: Optional[int], rng: np.random.Generator, bound: int = 5
) -> list[np.ndarray]:
    """Uniform residues mod ``p``, or integers in ``[-bound, bound]`` in exact mode."""
    if p is None:
        return [
            np.array(rng.integers(-bound, bound + 1, size=(d, d)).tolist(), dtype=object)
            for _ in range(count)
        ]
    return [rng.integers(0, p, size=(d, d), dtype=np.int64) for _ in range(count)]


def elementary_basis(d: int, p: Optional[int] = DEFAULT_PRIME) -> list[np.ndarray]:
    """``e_{1,1}, e_{1,2}, ..., e_{d,d}`` in lexicographic order."""
    basis = []
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=object if p is None else np.int64)
            e[i, j] = 1
            basis.append(e)
    return basis


def det_mod(m: np.ndarray, p: Optional[int]) -> Union[int, Fraction]:
    """Determinant by Gaussian elimination (exact rationals when ``p is None``)."""
    size = m.shape[0]
    if p is None:
        rows = [[Fraction(int(x)) for x in row] for row in m.tolist()]
    else:
        rows = [[int(x) % p for x in row] for row in m.tolist()]
    det: Union[int, Fraction] = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv
        inv = 1 / pv if p is None else pow(pv, -1, p)
        for r in range(col + 1, size):
            f = rows[r][col] * inv
            if p is not None:
                f %= p
            if f:
                rows[r] = [
                    (x - f * y) if p is None else (x - f * y) % p
                    for x, y in zip(rows[r], rows[col])
                ]
    return det if p is None else det % p


def inverse_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Inverse of a square matrix modulo ``p``."""
    size = m.shape[0]
    rows = [[int(x) % p for x in row] + [int(i == j) for j in range(size)]
            for i, row in enumerate(m.tolist())]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular mod p")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = pow(rows[col][col], -1, p)
        rows[col] = [x * inv % p for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[col])]
    return np.array([row[size:] for row in rows], dtype=np.int64)


def random_invertible(d: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        g = rng.integers(0, p, size=(d, d), dtype=np.int64)
        if det_mod(g, p):
            return g


def tensor_power(g: np.ndarray, n: int, p: Optional[int]) -> np.ndarray:
    out = identity(1, p)
    for _ in range(n):
        out = kron(out, g, p)
    return out


def det_vec(xs: Sequence[np.ndarray], p: Optional[int] = DEFAULT_PRIME):
    """Determinant of the ``d^2 x d^2`` matrix whose columns are the coordinates of ``xs``.

    Coordinates are taken in the lexicographically ordered elementary basis,
    i.e. ``x[i, j]`` is coordinate ``i*d + j``.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("need at least one matrix")
    d = xs[0].shape[0]
    if len(xs) != d * d:
        raise ValueError(f"det_vec needs exactly d^2 = {d * d} matrices, got {len(xs)}")
    m = np.stack([np.asarray(x).reshape(-1) for x in xs], axis=1)
    return det_mod(m, p)


# ------------------------------------------------------ permutation operators


def permutation_operator(perm: Sequence[int], d: int, p: Optional[int] = DEFAULT_PRIME) -> np.ndarray:
    """Operator on ``(F^d)^{⊗n}`` sending tensor factor ``i`` to slot ``perm(i)``.

    With this convention ``tr(P_c x_1 ⊗ ... ⊗ x_k) = tr(x_1 x_2 ... x_k)`` for
    the cycle ``c = (k, ..., 2, 1)``.
    """
    n = len(perm)
    size = d**n
    eye = identity(size, p).reshape([d] * n + [size])
    inv = invert(tuple(perm))
    return np.ascontiguousarray(np.transpose(eye, list(inv) + [n]).reshape(size, size))


def _coeff_mod(c: Fraction, p: Optional[int]):
    c = Fraction(c)
    if p is None:
        return c
    if c.denominator % p == 0:
        raise ValueError(
            f"coefficient {c} has a denominator divisible by p={p}; use a different prime"
        )
    return c.numerator * pow(c.denominator, -1, p) % p


def eval_group_algebra(a: GroupAlgebraElement, d: int, p: Optional[int] = DEFAULT_PRIME) -> np.ndarray:
    """The operator on ``(F^d)^{⊗n}`` induced by a group-algebra element."""
    n = a.degree
    size = d**n
    if p is None:
        out = np.zeros((size, size), dtype=object)
        out[:] = Fraction(0)
    else:
        out = np.zeros((size, size), dtype=np.int64)
    for perm, c in a.terms.items():
        out = out + _coeff_mod(c, p) * permutation_operator(perm, d, p)
        out = reduce(out, p)
    return out


# ------------------------------------------------------------ ST evaluation


def _ordered_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


def standard_polynomial(xs: Sequence[np.ndarray], p: Optional[int] = DEFAULT_PRIME) -> np.ndarray:
    """``St_k(x_1, ..., x_k)``; the empty product is the identity."""
    xs = list(xs)
    if not xs:
        raise ValueError("standard_polynomial needs at least one matrix to fix d")
    return _standard(xs, p)


def _standard(xs: list[np.ndarray], p: Optional[int], d: Optional[int] = None) -> np.ndarray:
    if not xs:
        return identity(d, p)
    return _standard_memo(xs, p, xs[0].shape[0])(tuple(range(len(xs))))


def _standard_memo(xs: Sequence[np.ndarray], p: Optional[int], d: int):
    """Memoised ``St`` over subsets of ``xs``, expanding along the first letter.

    ``St(b_0, ..., b_r) = sum_i (-1)^i x_{b_i} St(b_0, ..., b_i^, ..., b_r)``.
    """

    @lru_cache(maxsize=None)
    def st(block: tuple[int, ...]) -> np.ndarray:
        if not block:
            return identity(d, p)
        total = None
        for i, v in enumerate(block):
            term = matmul(xs[v], st(block[:i] + block[i + 1:]), p)
            if i % 2:
                term = -term
            total = term if total is None else total + term
        return reduce(total, p)

    return st


def _validate(a: Sequence[int], xs: Sequence[np.ndarray], max_variables: int) -> tuple[Composition, int]:
    a = Composition(a)
    if a.weight != len(xs):
        raise ValueError(f"composition {a} has weight {a.weight} but {len(xs)} matrices given")
    if a.weight > max_variables:
        raise BudgetExceededError(
            f"{a.weight} variables exceed the enumeration cap of {max_variables}"
        )
    if not xs:
        raise ValueError("at least one matrix is required")
    d = xs[0].shape[0]
    if any(x.shape != (d, d) for x in xs):
        raise ValueError("all matrices must be d x d")
    return a, d


def evaluate_st(
    a: Sequence[int],
    xs: Sequence[np.ndarray],
    p: Optional[int] = DEFAULT_PRIME,
    method: str = "young",
    max_variables: int = MAX_VARIABLES,
) -> np.ndarray:
    """Evaluate ``ST(a)(x_1, ..., x_k)`` as a ``d^n x d^n`` operator.

    Methods
    -------
    ``"young"``
        Sum over ordered set partitions of the variables into the blocks of
        ``a``; each block contributes a standard polynomial. Intermediate
        tensor products are memoised on the set of unused variables.
    ``"dfs"``
        Depth-first enumeration of S_k carrying partial block products and
        partial Kronecker products, so each leaf costs only its changed suffix.
    ``"naive"``
        Recompute every term from scratch; reference for the other two.
    """
    _check_prime(p)
    xs = [as_field(x, p) for x in xs]
    a, d = _validate(a, xs, max_variables)
    if method == "young":
        return _st_young(a, xs, d, p)
    if method == "dfs":
        return _st_dfs(a, xs, d, p)
    if method == "naive":
        return _st_naive(a, xs, d, p)
    raise ValueError(f"unknown method {method!r}")


def _st_young(a: Composition, xs: list[np.ndarray], d: int, p: Optional[int]) -> np.ndarray:
    block_value = _standard_memo(xs, p, d)

    @lru_cache(maxsize=None)
    def rest(remaining: tuple[int, ...], slot: int) -> np.ndarray:
        if slot == len(a):
            return identity(1, p)
        size = a[slot]
        total = None
        for idx in itertools.combinations(range(len(remaining)), size):
            block = tuple(remaining[i] for i in idx)
            others = tuple(v for i, v in enumerate(remaining) if i not in idx)
            # sign of moving the chosen block in front of the others
            shift = sum(i - j for j, i in enumerate(idx))
            term = kron(block_value(block), rest(others, slot + 1), p)
            if shift % 2:
                term = -term
            total = term if total is None else reduce(total + term, p)
        return reduce(total, p)

    return rest(tuple(range(a.weight)), 0)


def _st_dfs(a: Composition, xs: list[np.ndarray], d: int, p: Optional[int]) -> np.ndarray:
    k = a.weight
    ends = list(itertools.accumulate(a))
    eye = identity(d, p)
    size = d ** len(a)
    total = np.zeros((size, size), dtype=object if p is None else np.int64)

    def close_empty(done: np.ndarray, slot: int) -> tuple[np.ndarray, int]:
        # zero-length blocks at this position contribute identity factors
        while slot < len(a) and a[slot] == 0:
            done = kron(done, eye, p)
            slot += 1
        return done, slot

    def walk(done: np.ndarray, slot: int, partial: np.ndarray, used: int, sgn: int, depth: int):
        nonlocal total
        if depth == k:
            done, slot = close_empty(done, slot)
            total = reduce(total + (done if sgn > 0 else -done), p)
            return
        smaller_unused = 0
        for v in range(k):
            if used >> v & 1:
                continue
            s = -sgn if smaller_unused % 2 else sgn
            smaller_unused += 1
            prod = matmul(partial, xs[v], p)
            if depth + 1 == ends[slot]:
                nxt, nslot = close_empty(kron(done, prod, p), slot + 1)
                walk(nxt, nslot, eye, used | (1 << v), s, depth + 1)
            else:
                walk(done, slot, prod, used | (1 << v), s, depth + 1)

    start, slot = close_empty(identity(1, p), 0)
    walk(start, slot, eye, 0, 1, 0)
    return total


def _st_naive(a: Composition, xs: list[np.ndarray], d: int, p: Optional[int]) -> np.ndarray:
    k = a.weight
    size = d ** len(a)
    total = np.zeros((size, size), dtype=object if p is None else np.int64)
    for order in itertools.permutations(range(k)):
        out = identity(1, p)
        pos = 0
        for part in a:
            block = identity(d, p)
            for v in order[pos:pos + part]:
                block = matmul(block, xs[v], p)
            pos += part
            out = kron(out, block, p)
        total = reduce(total + _ordered_sign(order) * out, p)
    return total


# ------------------------------------------------------------- T wedge


def canonical_trace_blocks(d: int) -> list[tuple[int, ...]]:
    """0-based variable blocks ``(0), (1,2,3), (4,...,8), ...`` of lengths 1, 3, ..., 2d-1."""
    blocks, start = [], 0
    for length in range(1, 2 * d, 2):
        blocks.append(tuple(range(start, start + length)))
        start += length
    return blocks


def evaluate_t_wedge(
    d: int, xs: Sequence[np.ndarray], p: Optional[int] = DEFAULT_PRIME, experimental: bool = False
):
    """Alternation of ``tr(x_1) tr(x_2 x_3 x_4) ... tr(... x_{d^2})`` over all ``d^2`` variables.

    Exact for ``d <= 3``; ``d = 4`` needs ``experimental=True`` and is slow on
    generic inputs.
    """
    _check_prime(p)
    xs = [as_field(x, p) for x in xs]
    if len(xs) != d * d:
        raise ValueError(f"need d^2 = {d * d} matrices, got {len(xs)}")
    if d > 4 or (d == 4 and not experimental):
        raise BudgetExceededError(f"T_wedge for d={d} exceeds the enumeration budget")
    sizes = [len(b) for b in canonical_trace_blocks(d)]
    st = _standard_memo(xs, p, d)

    @lru_cache(maxsize=None)
    def traced(block: tuple[int, ...]):
        value = sum(st(block)[i, i] for i in range(d))
        return value if p is None else int(value) % p

    @lru_cache(maxsize=None)
    def rest(remaining: tuple[int, ...], slot: int):
        if slot == len(sizes):
            return 1
        total = 0
        for idx in itertools.combinations(range(len(remaining)), sizes[slot]):
            block = tuple(remaining[i] for i in idx)
            t = traced(block)
            if not t:
                continue
            others = tuple(v for i, v in enumerate(remaining) if i not in idx)
            shift = sum(i - j for j, i in enumerate(idx))
            term = t * rest(others, slot + 1)
            total += -term if shift % 2 else term
            if p is not None:
                total %= p
        return total

    return rest(tuple(range(d * d)), 0)


def t_wedge_on_elementary_basis(d: int, max_d: int = 4) -> int:
    """Exact value of the trace wedge at ``e_{1,1}, e_{1,2}, ..., e_{d,d}``.

    Elementary matrices multiply to a non-zero matrix only along walks, so the
    traced standard polynomials are sums over closed walks and most blocks
    vanish; this keeps ``d = 4`` within reach.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d > max_d:
        raise BudgetExceededError(f"elementary-basis wedge for d={d} exceeds max_d={max_d}")
    edges = [(i, j) for i in range(d) for j in range(d)]
    sizes = [len(b) for b in canonical_trace_blocks(d)]

    @lru_cache(maxsize=None)
    def traced(block: tuple[int, ...]) -> int:
        # odd-length rotations are even permutations and preserve the trace,
        # so count walks that start at the block minimum and multiply by |block|
        k = len(block)
        first = block[0]
        total = 0

        def walk(order: list[int], used: int, node: int):
            nonlocal total
            if len(order) == k:
                if node == edges[first][0]:
                    total += _ordered_sign([block.index(v) for v in order])
                return
            for pos in range(1, k):
                if used >> pos & 1:
                    continue
                v = block[pos]
                if edges[v][0] == node:
                    order.append(v)
                    walk(order, used | (1 << pos), edges[v][1])
                    order.pop()

        walk([first], 1, edges[first][1])
        return k * total

    @lru_cache(maxsize=None)
    def rest(remaining: tuple[int, ...], slot: int) -> int:
        if slot == len(sizes):
            return 1
        total = 0
        for idx in itertools.combinations(range(len(remaining)), sizes[slot]):
            block = tuple(remaining[i] for i in idx)
            t = traced(block)
            if not t:
                continue
            others = tuple(v for i, v in enumerate(remaining) if i not in idx)
            shift = sum(i - j for j, i in enumerate(idx))
            term = t * rest(others, slot + 1)
            total += -term if shift % 2 else term
        return total

    return rest(tuple(range(d * d)), 0)


# ------------------------------------------------------------ certification


def _structured_tuples(k: int, d: int, count: int, rng: np.random.Generator, p):
    basis = elementary_basis(d, p)
    if k > d * d:
        return []
    tuples = [basis[:k]]
    for _ in range(count):
        idx = rng.choice(d * d, size=k, replace=False)
        tuples.append([basis[i] for i in idx])
    return tuples


def certify(
    a: Union[str, Sequence[int]],
    d: int,
    trials: int = 20,
    seed: int = 0,
    p: Optional[int] = None,
    max_variables: int = MAX_VARIABLES,
    c_d_max: int = 4,
) -> dict:
    """Check a symbolic verdict against explicit evaluations.

    * TPI verdicts: every evaluation (random and elementary-basis tuples) must vanish.
    * Non-TPI with ``k = d^2`` and no zero parts: ``ST(a)(x) = det(x) J_a`` entrywise.
    * Non-TPI with ``k < d^2``: some evaluation must be non-zero.

    Returns a JSON-ready report; a verdict of ``"FAILURE"`` means the
    evaluation contradicts the symbolic result.
    """
    from .decision import is_tpi_sequence
    from .evaluator import determine_c_d_sign, j_lambda

    started = time.perf_counter()
    p = default_prime() if p is None else p
    _check_prime(p)
    comp = Composition.parse(a) if isinstance(a, str) else Composition(a)
    k = comp.weight
    if k > max_variables:
        raise BudgetExceededError(f"{k} variables exceed the enumeration cap of {max_variables}")
    verdict = is_tpi_sequence(comp, d)
    rng = np.random.default_rng(seed)

    random_tuples = [random_matrices(k, d, p, rng) for _ in range(trials)]
    max_residue = 0
    checked = 0

    if verdict.is_tpi:
        tuples = random_tuples + _structured_tuples(k, d, trials, rng, p)
        for xs in tuples:
            value = evaluate_st(comp, xs, p, max_variables=max_variables)
            max_residue = max(max_residue, max_abs(value, p))
            checked += 1
        outcome = "identity" if max_residue == 0 else "FAILURE"
        mode = "vanishing"
    elif k == d * d and 0 not in comp:
        c_sign = determine_c_d_sign(d, max_d=c_d_max)
        if c_sign is None:
            raise BudgetExceededError(
                f"sign of C_d is undetermined for d={d} (cap c_d_max={c_d_max})"
            )
        j = j_lambda(comp, d).signed(c_sign)
        j_op = eval_group_algebra(j, d, p)
        nonzero = 0
        for xs in random_tuples:
            value = evaluate_st(comp, xs, p, max_variables=max_variables)
            det = int(det_vec(xs, p))
            diff = reduce(value - reduce(det * j_op, p), p)
            max_residue = max(max_residue, max_abs(diff, p))
            nonzero += bool(max_abs(value, p))
            checked += 1
        outcome = "equality" if max_residue == 0 and nonzero else "FAILURE"
        mode = "det_times_J"
    else:
        tuples = _structured_tuples(k, d, trials, rng, p) + random_tuples
        found = False
        for xs in tuples:
            value = evaluate_st(comp, xs, p, max_variables=max_variables)
            max_residue = max(max_residue, max_abs(value, p))
            checked += 1
            found = found or max_residue > 0
        outcome = "nonzero" if found else "FAILURE"
        mode = "nonvanishing"

    return {
        "input": str(comp),
        "d": d,
        "p": p,
        "seed": seed,
        "trials": trials,
        "tuples_checked": checked,
        "mode": mode,
        "symbolic_verdict": "TPI" if verdict.is_tpi else "NOT TPI",
        "verdict": outcome,
        "max_residue": max_residue,
        # chance that a non-zero polynomial of degree k vanishes at one random point
        "false_zero_bound_per_trial": f"{k}/{p}",
        "elapsed_ms": round((time.perf_counter() - started) * 1000, 3),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


# names used in the mathematical notation
evaluate_ST = evaluate_st
evaluate_T_wedge = evaluate_t_wedge
