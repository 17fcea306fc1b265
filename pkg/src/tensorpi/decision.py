"""Deciding which ST(lambda) are tensor polynomial identities on d x d matrices.

``ST(lambda)`` with ``lambda ⊢ k`` fails to be an identity exactly when
``k <= d^2`` and ``lambda`` padded with ones to weight ``d^2`` refines the
staircase ``(2d-1, ..., 3, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx

from .partitions import (
    Composition,
    Partition,
    RefinementWitness,
    delta,
    integer_part_count,
    oplus,
    pad_refines,
    pad_with_ones,
    partitions_of,
    refinement_witness,
    remove_one_box,
)

MAX_D = 64

DEGREE_EXCEEDS = "degree_exceeds_d_squared"
NOT_REFINEMENT = "padding_not_refinement"
REFINES = "padding_refines"


@dataclass(frozen=True)
class TpiVerdict:
    lam: Partition
    d: int
    is_tpi: bool
    reason: str
    witness: Optional[RefinementWitness] = None

    def describe(self) -> str:
        if self.is_tpi:
            return "TPI"
        return f"NOT TPI; witness {self.witness.describe()}"

    def to_json(self) -> dict:
        out = {
            "lambda": list(self.lam),
            "d": self.d,
            "is_tpi": self.is_tpi,
            "reason": self.reason,
        }
        if self.witness is not None:
            out["witness"] = {
                "padded": list(self.witness.mu),
                "target": list(self.witness.target),
                "groups": [[self.witness.mu[i] for i in g] for g in self.witness.groups],
            }
        return out


def _check_d(d: int) -> None:
    if not 1 <= d <= MAX_D:
        raise ValueError(f"d must lie in 1..{MAX_D}, got {d}")


def is_tpi(lam: Sequence[int], d: int) -> TpiVerdict:
    _check_d(d)
    lam = Partition(lam)
    if lam.weight > d * d:
        return TpiVerdict(lam, d, True, DEGREE_EXCEEDS)
    witness = refinement_witness(pad_with_ones(lam, d * d), delta(d))
    if witness is None:
        return TpiVerdict(lam, d, True, NOT_REFINEMENT)
    return TpiVerdict(lam, d, False, REFINES, witness)


def is_tpi_sequence(a: Sequence[int], d: int) -> TpiVerdict:
    """Verdict for a composition: zeros are dropped and the parts sorted."""
    return is_tpi(Composition(a).to_partition(), d)


def min_rect_exponent(d: int, m: int) -> int:
    """Least ``n`` such that ``ST(m^n)`` is an identity on d x d matrices."""
    _check_d(d)
    return integer_part_count(d, m) + 1


def rect_tpi_table(d_max: int, d_min: int = 2) -> dict[int, list[tuple[int, int]]]:
    """Minimal rectangular identities ``m^n`` for ``2 <= m <= 2d``.

    Rows with ``m > 2d`` are omitted: there ``m^1`` is already implied by
    ``(2d)^1``, as are all exponents above the minimal one.
    """
    if d_max < d_min:
        raise ValueError(f"d_max must be at least {d_min}")
    return {d: [(m, min_rect_exponent(d, m)) for m in range(2, 2 * d + 1)]
            for d in range(d_min, d_max + 1)}


def is_lambda_minimal(lam: Sequence[int], d: int) -> bool:
    lam = Partition(lam)
    if not is_tpi(lam, d).is_tpi:
        raise ValueError(f"ST({lam}) is not a TPI for d={d}; minimality is undefined")
    return all(not is_tpi(smaller, d).is_tpi for smaller in remove_one_box(lam))


def lambda_dn(d: int, n: int) -> Partition:
    """The rectangle ``(2(d - n + 1))^n``."""
    return Partition([2 * (d - n + 1)] * n)


def bett_check(d: int, m: int) -> bool:
    """Compare the refinement verdict for ``m^{[d;m]} ⊕ (m-1)`` with the parity rule.

    The rule says the partition is not an identity iff ``m`` is even, or ``m``
    is odd and ``m <= d``. Returns whether both agree.
    """
    if not 2 <= m <= 2 * d:
        raise ValueError(f"need 2 <= m <= 2d, got m={m}, d={d}")
    lam = oplus([m] * integer_part_count(d, m), [m - 1])
    refinement_says_not_tpi = not is_tpi(lam, d).is_tpi
    rule_says_not_tpi = m % 2 == 0 or m <= d
    return refinement_says_not_tpi == rule_says_not_tpi


def non_tpi_set(
    d: int, min_part: int = 1, k_max: Optional[int] = None, include_single_box: bool = False
) -> list[Partition]:
    """All ``lambda`` with weight in ``1..k_max`` and parts ``>= min_part`` that are not identities.

    ``include_single_box`` adds ``(1)`` regardless of ``min_part``.
    """
    _check_d(d)
    k_max = d * d if k_max is None else min(k_max, d * d)
    out = []
    for k in range(k_max, 0, -1):
        for lam in partitions_of(k):
            if lam[-1] >= min_part and not is_tpi(lam, d).is_tpi:
                out.append(lam)
    if include_single_box and k_max >= 1 and Partition([1]) not in out:
        out.append(Partition([1]))
    return out


def refinement_graph(nodes: Iterable[Sequence[int]]) -> nx.DiGraph:
    """Hasse diagram of the padded refinement order restricted to ``nodes``.

    An edge ``lam -> mu`` means ``mu`` (padded with ones) refines ``lam`` and
    nothing in ``nodes`` sits strictly between them.
    """
    nodes = [Partition(n) for n in nodes]
    order = nx.DiGraph()
    order.add_nodes_from(nodes)
    for lam in nodes:
        for mu in nodes:
            if lam != mu and pad_refines(mu, lam):
                order.add_edge(lam, mu)
    return nx.transitive_reduction(order)


def hasse_edges(nodes: Iterable[Sequence[int]]) -> set[tuple[Partition, Partition]]:
    return set(refinement_graph(nodes).edges)


def lattice_dot(
    d: int, min_part: int = 1, k_max: Optional[int] = None, include_single_box: bool = False
) -> str:
    nodes = non_tpi_set(d, min_part, k_max, include_single_box)
    return to_dot(refinement_graph(nodes), name=f"non_tpi_d{d}")


def to_dot(graph: nx.DiGraph, name: str = "refinement") -> str:
    def key(lam):
        return (-lam.weight, tuple(-x for x in lam))

    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    for lam in sorted(graph.nodes, key=key):
        lines.append(f'  "{lam}";')
    for lam, mu in sorted(graph.edges, key=lambda e: (key(e[0]), key(e[1]))):
        lines.append(f'  "{lam}" -> "{mu}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
