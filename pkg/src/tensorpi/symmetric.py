"""Permutations and the rational group algebra of the symmetric group.

Conventions
-----------
Permutations are stored 0-based in one-line form; ``Permutation((1, 2, 0))``
sends 0 -> 1 -> 2 -> 0 and is displayed in 1-based cycle notation as
``(1,2,3)``. Products compose right to left, ``(p * q)(i) = p(q(i))``, which is
the convention under which ``p -> P_p`` (the operator moving tensor factor
``i`` to slot ``p(i)``) is a homomorphism.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from .partitions import Partition, cycles_of, partitions_of

DEFAULT_MAX_DEGREE = 9

Scalar = Union[int, Fraction]


class DegreeCapError(ValueError):
    """Raised when a full expansion over S_n would exceed the degree cap."""


def check_degree(n: int, max_degree: Optional[int] = None) -> None:
    cap = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    if n > cap:
        raise DegreeCapError(
            f"degree {n} exceeds the group-algebra cap of {cap} "
            f"({math.factorial(n)} terms); raise max_degree explicitly to proceed"
        )


class Permutation(tuple):
    """A bijection of ``{0, ..., n-1}`` in one-line form."""

    def __new__(cls, images: Iterable[int]) -> "Permutation":
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_one_line(cls, images: Iterable[int]) -> "Permutation":
        """Build from 1-based one-line notation."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from 1-based cycles, e.g. ``from_cycles(5, [(2, 5), (1, 3, 4)])``."""
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [c - 1 for c in cycle]
            if any(c in seen or not 0 <= c < n for c in cycle):
                raise ValueError(f"invalid cycle {cycle} for degree {n}")
            seen.update(cycle)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse cycle notation such as ``"(1,4)(2,5,3)"`` or ``"()"``."""
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            body = body.strip()
            if body:
                cycles.append([int(x) for x in body.split(",")])
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return Permutation(compose(self, other))
        return NotImplemented

    def inverse(self) -> "Permutation":
        return Permutation(invert(self))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles_of(self)

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def sign(self) -> int:
        return sign(self)

    def num_cycles(self) -> int:
        return num_cycles(self)

    def one_line(self) -> list[int]:
        return [i + 1 for i in self]

    def __str__(self) -> str:
        return cycle_string(self)

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self)}, n={len(self)})"


def compose(p: tuple, q: tuple) -> tuple:
    """``(p q)(i) = p(q(i))``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[j] for j in q)


def invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


@lru_cache(maxsize=1 << 20)
def num_cycles(p: tuple) -> int:
    return len(cycles_of(p))


@lru_cache(maxsize=1 << 20)
def cycle_type(p: tuple) -> Partition:
    return Partition(len(c) for c in cycles_of(p))


def sign(p: tuple) -> int:
    return -1 if (len(p) - num_cycles(p)) % 2 else 1


def cycle_string(p: tuple) -> str:
    """1-based cycle notation, fixed points omitted, identity as ``()``."""
    parts = [c for c in cycles_of(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in parts)


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def class_size(rho: Partition) -> int:
    rho = Partition(rho)
    z = 1
    for part, mult in _multiplicities(rho).items():
        z *= part**mult * math.factorial(mult)
    return math.factorial(rho.weight) // z


def _multiplicities(parts: Iterable[int]) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for p in parts:
        counts[p] += 1
    return dict(counts)


# ---------------------------------------------------------------- characters


def hook_lengths(mu: Partition) -> list[list[int]]:
    mu = Partition(mu)
    conj = [sum(1 for part in mu if part > j) for j in range(mu[0])] if mu else []
    return [[mu[i] - j + conj[j] - i - 1 for j in range(mu[i])] for i in range(len(mu))]


def chi_dim(mu: Partition) -> int:
    """Dimension of the irreducible S_n module ``mu`` (hook length formula)."""
    mu = Partition(mu)
    hooks = math.prod(h for row in hook_lengths(mu) for h in row)
    return math.factorial(mu.weight) // hooks


def schur_dim(mu: Partition, d: int) -> int:
    """``s_mu(1, ..., 1)`` with ``d`` ones: the dimension of the GL(d) module ``mu``."""
    mu = Partition(mu)
    if len(mu) > d:
        return 0
    value = Fraction(1)
    for i, row in enumerate(hook_lengths(mu)):
        for j, hook in enumerate(row):
            value *= Fraction(d + j - i, hook)
    assert value.denominator == 1
    return int(value)


def mn_character(mu: Partition, rho: Partition) -> int:
    """Irreducible character ``chi_mu`` at cycle type ``rho`` (Murnaghan-Nakayama)."""
    mu, rho = Partition(mu), Partition(rho)
    if mu.weight != rho.weight:
        raise ValueError(f"weight mismatch: |{mu}| = {mu.weight}, |{rho}| = {rho.weight}")
    return _mn(tuple(mu), tuple(rho))


@lru_cache(maxsize=None)
def _mn(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    length = len(mu)
    beta = [mu[i] + length - 1 - i for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((beta_set - {b}) | {target}, reverse=True)
        new_mu = tuple(
            p for p in (new_beta[i] - (length - 1 - i) for i in range(length)) if p > 0
        )
        total += (-1) ** height * _mn(new_mu, rest)
    return total


# ------------------------------------------------------------- group algebra


class GroupAlgebraElement:
    """A finite rational combination of permutations of one degree.

    Zero coefficients are never stored. Keys are 0-based one-line tuples.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Optional[Mapping[tuple, Scalar]] = None):
        self.degree = degree
        clean: dict[tuple, Fraction] = {}
        for perm, coeff in (terms or {}).items():
            if len(perm) != degree:
                raise ValueError(f"permutation {perm} has wrong degree for {degree}")
            coeff = Fraction(coeff)
            if coeff:
                clean[tuple(perm)] = clean.get(tuple(perm), 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, {tuple(range(n)): 1})

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n)

    @classmethod
    def basis(cls, perm: Iterable[int]) -> "GroupAlgebraElement":
        perm = tuple(perm)
        return cls(len(perm), {perm: 1})

    @classmethod
    def from_class_function(
        cls, n: int, values: Callable[[Partition], Scalar] | Mapping[Partition, Scalar],
        max_degree: Optional[int] = None,
    ) -> "GroupAlgebraElement":
        check_degree(n, max_degree)
        lookup = values if callable(values) else (lambda rho: values.get(rho, 0))
        cache = {rho: Fraction(lookup(rho)) for rho in partitions_of(n)}
        terms = {}
        for images in itertools.permutations(range(n)):
            c = cache[cycle_type(images)]
            if c:
                terms[images] = c
        out = cls(n)
        out.terms = terms
        return out

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return GroupAlgebraElement(self.degree, terms)

    def __neg__(self):
        out = GroupAlgebraElement(self.degree)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "GroupAlgebraElement":
        c = Fraction(c)
        out = GroupAlgebraElement(self.degree)
        if c:
            out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Permutation):
            other = GroupAlgebraElement.basis(other)
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, perm) -> Fraction:
        if isinstance(perm, str):
            perm = Permutation.parse(perm, self.degree)
        return self.terms.get(tuple(perm), Fraction(0))

    def items(self) -> list[tuple[Permutation, Fraction]]:
        """Terms in lexicographic one-line order."""
        return [(Permutation(k), self.terms[k]) for k in sorted(self.terms)]

    def conjugate(self, perm: Iterable[int]) -> "GroupAlgebraElement":
        """``perm * self * perm^-1``."""
        p = tuple(perm)
        pinv = invert(p)
        return GroupAlgebraElement(
            self.degree, {compose(compose(p, k), pinv): v for k, v in self.terms.items()}
        )

    def is_central(self) -> bool:
        return find_noncentral_pair(self) is None

    def support_cycle_counts(self) -> set[int]:
        return {num_cycles(k) for k in self.terms}

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"perm": [i + 1 for i in k], "coeff": str(self.terms[k])}
                for k in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GroupAlgebraElement":
        n = int(data["degree"])
        return cls(
            n,
            {tuple(i - 1 for i in t["perm"]): Fraction(t["coeff"]) for t in data["terms"]},
        )

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement(degree={self.degree}, {format_element(self)})"


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product over exact rationals."""
    a._check(b)
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for p, x in a.terms.items():
        for q, y in b.terms.items():
            acc[tuple(p[j] for j in q)] += x * y
    out = GroupAlgebraElement(a.degree)
    out.terms = {k: v for k, v in acc.items() if v}
    return out


def add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a + b


def scale(a: GroupAlgebraElement, c: Scalar) -> GroupAlgebraElement:
    return a.scale(c)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_element(a: GroupAlgebraElement, order: Optional[Iterable[tuple]] = None) -> str:
    """Render as ``2() - (1,2)``; terms in lexicographic one-line order by default."""
    keys = sorted(a.terms) if order is None else [k for k in order if k in a.terms]
    if not keys:
        return "0"
    chunks = []
    for i, k in enumerate(keys):
        c = a.terms[k]
        neg = c < 0
        mag = -c if neg else c
        body = cycle_string(k)
        text = body if mag == 1 else f"{_fmt_coeff(mag)}{body}"
        if i == 0:
            chunks.append(("-" if neg else "") + text)
        else:
            chunks.append((" - " if neg else " + ") + text)
    return "".join(chunks)


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*((?:\([\d,\s]*\))+)")


def parse_element(text: str, degree: int) -> GroupAlgebraElement:
    """Parse a linear combination written in cycle notation.

    Accepts the usual tabular layout, including an optional common
    prefactor: ``"3[7() - 3(2,3) + 2(1,2,3)]"`` or ``"1/2[(2,3,4) - (2,4,3)]"``.
    """
    text = text.replace("−", "-").strip()
    prefactor = Fraction(1)
    outer = re.fullmatch(r"([+-]?\s*\d*(?:/\d+)?)\s*\[(.*)\]", text, flags=re.S)
    if outer:
        head = outer.group(1).replace(" ", "")
        if head in ("", "+"):
            prefactor = Fraction(1)
        elif head == "-":
            prefactor = Fraction(-1)
        else:
            prefactor = Fraction(head)
        text = outer.group(2)
    terms: dict[tuple, Fraction] = defaultdict(Fraction)
    pos = 0
    for match in _TERM.finditer(text):
        gap = text[pos:match.start()].strip()
        if gap:
            raise ValueError(f"unparseable fragment {gap!r} in {text!r}")
        pos = match.end()
        sgn = -1 if match.group(1) == "-" else 1
        coeff = Fraction(match.group(2)) if match.group(2) else Fraction(1)
        perm = Permutation.parse(match.group(3), degree)
        terms[tuple(perm)] += sgn * coeff * prefactor
    if text[pos:].strip():
        raise ValueError(f"unparseable tail {text[pos:]!r}")
    return GroupAlgebraElement(degree, terms)


# --------------------------------------------------------- central elements


def find_noncentral_pair(a: GroupAlgebraElement) -> Optional[tuple[Permutation, Permutation]]:
    """Two permutations of equal cycle type with different coefficients, if any."""
    check_degree(a.degree)
    seen: dict[Partition, tuple[tuple, Fraction]] = {}
    for images in itertools.permutations(range(a.degree)):
        c = a.terms.get(images, Fraction(0))
        ct = cycle_type(images)
        if ct in seen:
            ref, value = seen[ct]
            if value != c:
                return Permutation(ref), Permutation(images)
        else:
            seen[ct] = (images, c)
    return None


@dataclass
class CentralElement:
    """A central element given in both the idempotent and class-sum bases."""

    degree: int
    omega_coeffs: dict[Partition, Fraction] = field(default_factory=dict)
    class_coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    @classmethod
    def from_class_coeffs(cls, n: int, class_coeffs: Mapping[Partition, Scalar]) -> "CentralElement":
        cc = {Partition(k): Fraction(v) for k, v in class_coeffs.items() if v}
        omega = {}
        for mu in partitions_of(n):
            total = sum(
                (c * class_size(rho) * mn_character(mu, rho) for rho, c in cc.items()),
                Fraction(0),
            )
            value = total / chi_dim(mu)
            if value:
                omega[mu] = value
        return cls(n, omega, cc)

    @classmethod
    def from_omega_coeffs(cls, n: int, omega_coeffs: Mapping[Partition, Scalar]) -> "CentralElement":
        om = {Partition(k): Fraction(v) for k, v in omega_coeffs.items() if v}
        nfact = math.factorial(n)
        cc = {}
        for rho in partitions_of(n):
            value = sum(
                (c * chi_dim(mu) * mn_character(mu, rho) / nfact for mu, c in om.items()),
                Fraction(0),
            )
            if value:
                cc[rho] = value
        return cls(n, om, cc)

    def to_element(self, max_degree: Optional[int] = None) -> GroupAlgebraElement:
        return GroupAlgebraElement.from_class_function(
            self.degree, self.class_coeffs, max_degree=max_degree
        )

    def scale(self, c: Scalar) -> "CentralElement":
        c = Fraction(c)
        return CentralElement(
            self.degree,
            {k: v * c for k, v in self.omega_coeffs.items() if v * c},
            {k: v * c for k, v in self.class_coeffs.items() if v * c},
        )


def expand_central(a: GroupAlgebraElement) -> CentralElement:
    """Coefficients of a central element in the idempotent and class-sum bases."""
    pair = find_noncentral_pair(a)
    if pair is not None:
        p, q = pair
        raise ValueError(
            f"element is not central: conjugate permutations {p} and {q} carry "
            f"coefficients {a[p]} and {a[q]}"
        )
    class_coeffs: dict[Partition, Fraction] = {}
    for k, v in a.terms.items():
        class_coeffs.setdefault(cycle_type(k), v)
    return CentralElement.from_class_coeffs(a.degree, class_coeffs)


def omega(mu: Partition, max_degree: Optional[int] = None) -> GroupAlgebraElement:
    """Minimal central idempotent ``(chi(e)/n!) sum_s chi(s^-1) s`` of S_n."""
    mu = Partition(mu)
    n = mu.weight
    scale_ = Fraction(chi_dim(mu), math.factorial(n))
    return GroupAlgebraElement.from_class_function(
        n, lambda rho: scale_ * mn_character(mu, rho), max_degree=max_degree
    )


def class_sum(mu: Partition, max_degree: Optional[int] = None) -> GroupAlgebraElement:
    mu = Partition(mu)
    return GroupAlgebraElement.from_class_function(
        mu.weight, lambda rho: 1 if rho == mu else 0, max_degree=max_degree
    )


# ------------------------------------------------------- traces, Phi and Wg


def tr_d(a: GroupAlgebraElement, d: int) -> Fraction:
    """Trace of ``a`` acting on ``(C^d)^{⊗n}``; a permutation contributes ``d**cycles``."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return sum((v * d ** num_cycles(k) for k, v in a.terms.items()), Fraction(0))


def phi(a: GroupAlgebraElement, d: int, max_degree: Optional[int] = None) -> GroupAlgebraElement:
    """``sum_s tr_d(s^-1 a) s``."""
    n = a.degree
    check_degree(n, max_degree)
    terms = {}
    for s in itertools.permutations(range(n)):
        sinv = invert(s)
        value = sum(
            (v * d ** num_cycles(tuple(sinv[j] for j in k)) for k, v in a.terms.items()),
            Fraction(0),
        )
        if value:
            terms[s] = value
    out = GroupAlgebraElement(n)
    out.terms = terms
    return out


def weingarten_class_values(d: int, n: int) -> dict[Partition, Fraction]:
    """Coefficient of ``Wg(d, n)`` on each conjugacy class of S_n."""
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    nfact = math.factorial(n)
    weights = {
        mu: Fraction(chi_dim(mu) ** 2, nfact * nfact * schur_dim(mu, d))
        for mu in partitions_of(n, max_len=d)
    }
    return {
        rho: sum((w * mn_character(mu, rho) for mu, w in weights.items()), Fraction(0))
        for rho in partitions_of(n)
    }


def weingarten(d: int, n: int, max_degree: Optional[int] = None) -> GroupAlgebraElement:
    """The Weingarten element ``(1/n!) sum_{l(mu) <= d} chi_mu(e)/s_mu(1^d) omega_mu``."""
    check_degree(n, max_degree)
    return GroupAlgebraElement.from_class_function(
        n, weingarten_class_values(d, n), max_degree=max_degree
    )


def weingarten_central(d: int, n: int) -> CentralElement:
    nfact = math.factorial(n)
    return CentralElement.from_omega_coeffs(
        n,
        {mu: Fraction(chi_dim(mu), nfact * schur_dim(mu, d)) for mu in partitions_of(n, max_len=d)},
    )


def multiply_by_class_function(
    a: GroupAlgebraElement, values: Mapping[Partition, Fraction], max_degree: Optional[int] = None
) -> GroupAlgebraElement:
    """``a * z`` for the central element ``z`` with class values ``values``.

    Cost is ``len(a) * n!`` without materialising ``z``.
    """
    n = a.degree
    check_degree(n, max_degree)
    acc: dict[tuple, Fraction] = defaultdict(Fraction)
    for q in itertools.permutations(range(n)):
        zq = values.get(cycle_type(q), 0)
        if not zq:
            continue
        for p, x in a.terms.items():
            acc[tuple(p[j] for j in q)] += x * zq
    out = GroupAlgebraElement(n)
    out.terms = {k: v for k, v in acc.items() if v}
    return out
