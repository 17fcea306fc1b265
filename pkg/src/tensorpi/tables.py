"""Text and JSON renderings of the rectangular, J_d and J_lambda tables."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .decision import rect_tpi_table
from .evaluator import j_delta_central, j_lambda
from .partitions import Partition
from .symmetric import GroupAlgebraElement, format_element


def common_prefactor(values: Iterable[Fraction]) -> Fraction:
    """Positive rational ``c`` such that every value divided by ``c`` is a coprime integer."""
    values = [Fraction(v) for v in values if v]
    if not values:
        return Fraction(1)
    num = math.gcd(*(v.numerator for v in values))
    den = math.lcm(*(v.denominator for v in values))
    return Fraction(num, den)


def _fmt_prefactor(c: Fraction) -> str:
    if c == 1:
        return ""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _bracketed(prefix: str, body: str, brackets: str = "()") -> str:
    return f"{prefix}{brackets[0]}{body}{brackets[1]}" if prefix else body


def format_combination(coeffs: Sequence[tuple[str, Fraction]]) -> str:
    """``6 w[4] + 14 w[3,1]`` style sum with integer coefficients."""
    chunks = []
    for i, (label, c) in enumerate(coeffs):
        mag = abs(c)
        text = label if mag == 1 else f"{mag}{label}"
        if i == 0:
            chunks.append(("-" if c < 0 else "") + text)
        else:
            chunks.append((" - " if c < 0 else " + ") + text)
    return "".join(chunks) or "0"


def _label(symbol: str, mu: Partition) -> str:
    return f"{symbol}[{','.join(map(str, mu))}]"


# ----------------------------------------------------------------- rect table


def rect_table_text(d_max: int) -> str:
    lines = ["d   minimal rectangular TPIs m^n"]
    for d, row in rect_tpi_table(d_max).items():
        lines.append(f"{d:<3} " + ", ".join(f"{m}^{n}" for m, n in row))
    return "\n".join(lines) + "\n"


def rect_table_json(d_max: int) -> dict:
    return {
        "rows": [
            {"d": d, "entries": [{"m": m, "n": n} for m, n in row]}
            for d, row in rect_tpi_table(d_max).items()
        ]
    }


# ------------------------------------------------------------------ J_d table


def jdelta_row(d: int, basis: str = "omega") -> tuple[Fraction, list[tuple[Partition, Fraction]]]:
    """Prefactor and reduced coefficients of ``J_d`` (taking ``C_d > 0``).

    ``basis="omega"`` lists idempotents in reverse-lexicographic order of the
    shape; ``basis="class"`` lists class sums with the shapes read
    non-decreasingly, in decreasing lexicographic order.
    """
    central = j_delta_central(d)
    if basis == "omega":
        coeffs = central.omega_coeffs
        keys = sorted(coeffs, reverse=True)
    elif basis == "class":
        coeffs = central.class_coeffs
        keys = sorted(coeffs, key=lambda mu: tuple(reversed(mu)), reverse=True)
    else:
        raise ValueError(f"basis must be 'omega' or 'class', got {basis!r}")
    pref = common_prefactor(coeffs.values())
    return pref, [(mu, coeffs[mu] / pref) for mu in keys]


def jdelta_text(d: int, basis: str = "omega") -> str:
    pref, row = jdelta_row(d, basis)
    symbol = "w" if basis == "omega" else "c"
    if basis == "class":
        labels = [(f"c[{','.join(map(str, reversed(mu)))}]", c) for mu, c in row]
    else:
        labels = [(_label(symbol, mu), c) for mu, c in row]
    body = format_combination(labels)
    return f"J_{d} = ±{_fmt_prefactor(pref)}({body})\n"


def jdelta_json(d: int, basis: str = "omega") -> dict:
    pref, row = jdelta_row(d, basis)
    return {
        "d": d,
        "basis": basis,
        "sign": "C_d > 0 assumed",
        "prefactor": str(pref),
        "coefficients": [{"shape": list(mu), "coeff": str(c)} for mu, c in row],
    }


# -------------------------------------------------------------- J_lambda table


def _factored(element: GroupAlgebraElement) -> str:
    pref = common_prefactor(element.terms.values())
    reduced = element.scale(1 / pref)
    return _bracketed(_fmt_prefactor(pref), format_element(reduced), "[]")


def jlambda_text(lam: Sequence[int], d: int, max_degree: Optional[int] = None) -> str:
    value = j_lambda(lam, d, max_degree)
    lines = [
        f"d = {d}, lambda = [{','.join(map(str, value.lam))}]",
        f"  Phi(J/C_d) = {format_element(value.phi_over_c)}",
        f"  ±J         = {_factored(value.j)}",
    ]
    central = value.central()
    if central is not None:
        om = sorted(central.omega_coeffs, reverse=True)
        lines.append(
            "  omega basis: "
            + format_combination([(_label("w", mu), central.omega_coeffs[mu]) for mu in om])
        )
    return "\n".join(lines) + "\n"


def jlambda_json(lam: Sequence[int], d: int, max_degree: Optional[int] = None) -> dict:
    value = j_lambda(lam, d, max_degree)
    return {
        "lambda": list(value.lam),
        "d": d,
        "c_d_magnitude": value.c_d_magnitude,
        "phi_over_c": value.phi_over_c.to_json(),
        "j": value.j.to_json(),
    }
