"""Limit probabilities at the dominant singularity, and the audit of the
printed tables against them.

All Schroeder limits are exact elements of Q(sqrt 2): the singularity is
``rho = 3 - 2 sqrt 2`` and each limit is ``F(rho) / S(rho)`` for a polynomial or
rational root-property series ``F``. The shared context factor ``A`` cancels
from numerator and denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .motzkin import SINGULARITY as MOTZKIN_SINGULARITY
from .motzkin import motzkin_count, motzkin_limit_probability
from .scalar import QuadExt, quad_to_decimal
from .schroeder import (
    balanced_root_ratfun,
    finite_balanced_probability,
    finite_probability,
    subtree_root_poly,
)
from .series import Polynomial, RationalFunction, UniSeries

Exact = Union[Fraction, QuadExt]

RHO = QuadExt(3, -2)

# printed decimals, kept verbatim as strings
PRINTED_SUBTREE_TABLE = {1: "0.2929", 2: "0", 3: "0.0503", 4: "0.0086", 5: "0.0187", 6: "0.0076", 7: "0.0097"}
PRINTED_BALANCED_TABLE = {0: "0.2929", 1: "0.0607", 2: "0.0022", 3: "0.000003"}
PRINTED_LEAF_CLOSED_FORM = (1 + QuadExt(0, 1)) / (QuadExt(0, 1) * QuadExt(3, 2))


def schroeder_radicand(x) -> QuadExt:
    x = QuadExt.coerce(x)
    return 1 - 6 * x + x * x


def motzkin_radicand(x) -> Fraction:
    x = Fraction(x)
    return 1 - 2 * x - 3 * x * x


def dominant_singularity(family: str) -> Exact:
    if family == "schroeder":
        return RHO
    if family == "motzkin":
        return MOTZKIN_SINGULARITY
    raise ValueError(f"unknown family {family!r}")


def schroeder_at_singularity() -> QuadExt:
    """``S(rho) = 2 rho / (1 + rho + sqrt(D(rho)))``; the radicand vanishes at rho."""
    if schroeder_radicand(RHO):
        raise ArithmeticError("radicand does not vanish at rho")
    return 2 * RHO / (1 + RHO)


def lemma_closed_form_at_singularity() -> QuadExt:
    """``R(rho, 1) = (1 + rho - sqrt(rho^2 + 2 rho + 1 - 8 rho)) / 4``."""
    y = 1
    radicand = (RHO * y) ** 2 + 2 * RHO * y + 1 - 4 * RHO * y * (y + 1)
    if radicand:
        raise ArithmeticError("radicand does not vanish at (rho, 1)")
    return (1 + RHO * y) / (2 * y + 2)


def ratio_diagnostic(series: UniSeries, n: int) -> Fraction:
    """``b_{n-1} / b_n``, which tends to the radius of convergence."""
    return series[n - 1] / series[n]


@dataclass(frozen=True)
class BenderInput:
    """``C = A * B``: an analytic factor ``A`` and the point ``b`` where the
    coefficient ratios of the singular factor ``B`` converge."""

    analytic_factor: Union[Polynomial, RationalFunction]
    singular_point: Exact
    singular_series: Optional[UniSeries] = None

    def __post_init__(self):
        b = self.singular_point
        if (QuadExt.coerce(b)).sign() <= 0:
            raise ValueError("singular point must be positive")
        f = self.analytic_factor
        if isinstance(f, RationalFunction) and not f.denominator(b):
            raise ZeroDivisionError("analytic factor has a pole at the singular point")


def bender_limit(inp: BenderInput) -> Exact:
    """Exact value of the analytic factor at the singular point."""
    return inp.analytic_factor(inp.singular_point)


class _RhoPowers:
    """Integer coordinates of ``rho^n = a_n + b_n sqrt 2``, grown on demand."""

    def __init__(self):
        self.a = [1]
        self.b = [0]

    def upto(self, n: int):
        a, b = self.a, self.b
        while len(a) <= n:
            x, y = a[-1], b[-1]
            a.append(3 * x - 4 * y)
            b.append(3 * y - 2 * x)
        return a, b


_rho_powers = _RhoPowers()


def eval_at_rho(p: Polynomial) -> QuadExt:
    """``p(rho)`` via a cached table of powers; same value as ``p(RHO)``."""
    if p.is_zero():
        return QuadExt(0)
    a, b = _rho_powers.upto(p.degree)
    if all(c.denominator == 1 for c in p.coeffs):
        ra = sum(int(c) * a[i] for i, c in enumerate(p.coeffs) if c)
        rb = sum(int(c) * b[i] for i, c in enumerate(p.coeffs) if c)
        return QuadExt(ra, rb)
    return p(RHO)


def limit_subtree_probability(k: int) -> QuadExt:
    """``R_k(rho) / S(rho)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return eval_at_rho(subtree_root_poly(k)) / schroeder_at_singularity()


def limit_balanced_probability(k: int) -> QuadExt:
    """``B_k^*(rho) / S(rho)``."""
    f = balanced_root_ratfun(k)
    den = eval_at_rho(f.denominator)
    if not den:
        raise ZeroDivisionError(f"B_{k}^* has a pole at rho")
    return eval_at_rho(f.numerator) / den / schroeder_at_singularity()


def limit_probability(family: str, k: int) -> Exact:
    if family == "schroeder":
        return limit_subtree_probability(k)
    if family == "motzkin":
        return motzkin_limit_probability(k)
    raise ValueError(f"unknown family {family!r}")


def motzkin_bender_limit(k: int) -> Fraction:
    """The same Motzkin limit, routed through :func:`bender_limit` on ``M_k x^k``."""
    return bender_limit(BenderInput(Polynomial.monomial(k, motzkin_count(k)), MOTZKIN_SINGULARITY))


def partial_sums(family: str, k_max: int) -> list[Exact]:
    """Running sums of the limit probabilities for k = 1..k_max."""
    out: list[Exact] = []
    total: Exact = QuadExt(0) if family == "schroeder" else Fraction(0)
    for k in range(1, k_max + 1):
        total = total + limit_probability(family, k)
        out.append(total)
    return out


@dataclass(frozen=True)
class TightnessResult:
    family: str
    k_max: int
    value: Exact

    @property
    def decimal(self) -> str:
        return quad_to_decimal(self.value, 12)


def tightness_partial_sum(k_max: int, family: str) -> TightnessResult:
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return TightnessResult(family, k_max, partial_sums(family, k_max)[-1])


# --------------------------------------------------------------------------
# finite-n convergence


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    finite: Fraction
    limit: QuadExt

    @property
    def error(self) -> QuadExt:
        return abs(QuadExt.coerce(self.finite) - self.limit)


def convergence(statistic: str, k: int, n_list) -> list[ConvergenceRow]:
    if statistic == "subtree":
        lim, fin = limit_subtree_probability(k), finite_probability
    elif statistic == "balanced":
        lim, fin = limit_balanced_probability(k), finite_balanced_probability
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    return [ConvergenceRow(n, fin(k, n), lim) for n in n_list]


# --------------------------------------------------------------------------
# discrepancy audit


def _digits(printed: str) -> int:
    return len(printed.split(".")[1]) if "." in printed else 1


@dataclass(frozen=True)
class DiscrepancyRow:
    k: int
    computed: QuadExt
    paper: str
    ratio: Optional[QuadExt]

    @property
    def half_at_printed_precision(self) -> str:
        return quad_to_decimal(self.computed / 2, _digits(self.paper))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "computed": self.computed.to_json(12),
            "paper": self.paper,
            "ratio_decimal": None if self.ratio is None else quad_to_decimal(self.ratio, 6),
            "half_computed": self.half_at_printed_precision,
        }


def _row(k: int, computed: QuadExt, paper: str) -> DiscrepancyRow:
    printed = Fraction(paper)
    ratio = computed / printed if printed else None
    return DiscrepancyRow(k, computed, paper, ratio)


def paper_discrepancy_report(table: str) -> list[DiscrepancyRow]:
    if table == "subtree":
        return [_row(k, limit_subtree_probability(k), p) for k, p in PRINTED_SUBTREE_TABLE.items()]
    if table == "balanced":
        return [_row(k, limit_balanced_probability(k), p) for k, p in PRINTED_BALANCED_TABLE.items()]
    if table in ("leaf", "leaf_corollary"):
        computed = limit_subtree_probability(1)
        printed = quad_to_decimal(PRINTED_LEAF_CLOSED_FORM, 4)
        # compared against the exact closed form, not its rounding
        return [DiscrepancyRow(1, computed, printed, computed / PRINTED_LEAF_CLOSED_FORM)]
    raise ValueError(f"unknown table {table!r}")
