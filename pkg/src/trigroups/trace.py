"""Trace polynomials of words in Z2 * Z3 and the facts used to bound them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby

from .polys import (
    GEN_X,
    GEN_Y,
    LAM,
    ONE,
    Cyclo,
    IntPoly,
    NotDivisible,
    cyclo_root,
    mat2_identity,
    mat2_mul,
    mat2_pow,
    mat2_trace_of_product,
)
from .words import Word, to_blocks


class TraceInvariantError(AssertionError):
    """The s-component of a word trace came out nonzero."""


# f = lam^4 - 3 lam^2 + 1, and the two quadratic factors
F_QUARTIC = IntPoly((1, 0, -3, 0, 1))
P_MINUS1 = IntPoly((-1, 0, 1))
P_MINUS2 = IntPoly((-2, 0, 1))
P_MINUS3 = IntPoly((-3, 0, 1))
G_SEXTIC = P_MINUS2 * F_QUARTIC**2


@lru_cache(maxsize=None)
def _block_matrix(kind: int, n: int):
    """``(X Y^kind)^n`` over the trace ring."""
    if kind == 1:
        base = mat2_mul(GEN_X, GEN_Y)
    else:
        base = mat2_mul(GEN_X, mat2_mul(GEN_Y, GEN_Y))
    return mat2_pow(base, n)


def word_matrix(w: Word):
    m = mat2_identity()
    for kind, run in groupby(w.alphas):
        m = mat2_mul(m, _block_matrix(kind, len(list(run))))
    return m


def trace_poly(w: Word) -> IntPoly:
    """Trace of ``W(X, Y)`` as an integer polynomial in ``lam``."""
    runs = [(k, len(list(r))) for k, r in groupby(w.alphas)]
    if len(runs) == 1:
        kind, n = runs[0]
        half = n // 2
        tr = mat2_trace_of_product(_block_matrix(kind, half), _block_matrix(kind, n - half))
    else:
        m = mat2_identity()
        for kind, n in runs[:-1]:
            m = mat2_mul(m, _block_matrix(kind, n))
        tr = mat2_trace_of_product(m, _block_matrix(*runs[-1]))
    if not tr.q.is_zero():
        raise TraceInvariantError(f"nonzero s-component {tr.q} for {w.alphas}")
    return tr.p


def target_poly(c: int, e: int) -> IntPoly:
    if c < 0 or e < 0:
        raise ValueError("c and e must be non-negative")
    return LAM * P_MINUS2**c * F_QUARTIC**e


# ---------------------------------------------------------------------------
# elementary factorisation


@dataclass(frozen=True)
class ElementaryForm:
    """``unit * lam^a (lam^2-1)^b (lam^2-2)^c (lam^2-3)^d (lam^4-3lam^2+1)^e``."""

    a: int
    b: int
    c: int
    d: int
    e: int
    unit: int = 1

    @property
    def degree(self) -> int:
        return self.a + 2 * (self.b + self.c + self.d) + 4 * self.e

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e)

    def expand(self) -> IntPoly:
        return (
            LAM**self.a * P_MINUS1**self.b * P_MINUS2**self.c * P_MINUS3**self.d * F_QUARTIC**self.e
        ) * self.unit

    def __str__(self):
        return f"(a,b,c,d,e)=({self.a},{self.b},{self.c},{self.d},{self.e}) unit={self.unit:+d}"


_ELEMENTARY_FACTORS = (LAM, P_MINUS1, P_MINUS2, P_MINUS3, F_QUARTIC)


def classify_elementary(p: IntPoly) -> ElementaryForm | None:
    """Split off elementary factors; ``None`` if something else remains."""
    if p.is_zero():
        raise ValueError("cannot classify the zero polynomial")
    exps = []
    rest = p
    for fac in _ELEMENTARY_FACTORS:
        k = 0
        while rest.degree >= fac.degree:
            try:
                rest = rest.divexact(fac)
            except NotDivisible:
                break
            k += 1
        exps.append(k)
    if rest.degree != 0 or abs(rest.lead()) != 1:
        return None
    return ElementaryForm(*exps, unit=rest.lead())


# ---------------------------------------------------------------------------
# top coefficients


@dataclass(frozen=True)
class CoeffReport:
    B1: int
    B2: int | None
    sum_beta_sq: int
    sum_beta_adj: int
    betas: tuple[Cyclo, ...]


def _real(z: Cyclo, what: str) -> int:
    if not z.is_real():
        raise ArithmeticError(f"{what} has nonzero imaginary part: {z}")
    return z.m


def betas(w: Word) -> list[Cyclo]:
    a = w.alphas
    n = len(a)
    return [-cyclo_root(a[(j + 1) % n] - a[j]) for j in range(n)]


def coeff_report(w: Word, check: bool = True) -> CoeffReport:
    """Sixth-root weights and the sums giving the two top coefficients.

    With ``check`` the results are compared against the actual
    coefficients of the trace polynomial.
    """
    n = len(w)
    if n < 2:
        raise ValueError("coefficient report needs at least two syllables")
    bs = betas(w)
    b1 = _real(sum(bs, Cyclo()), "B1")
    sq = _real(sum((b * b for b in bs), Cyclo()), "sum of beta^2")
    adj = _real(sum((bs[j] * bs[(j + 1) % n] for j in range(n)), Cyclo()), "sum of beta(j)beta(j+1)")
    b2 = None
    if n >= 4:
        acc = Cyclo()
        for j in range(n):
            for k in range(j + 2, n):
                if j == 0 and k == n - 1:
                    continue
                acc = acc + bs[j] * bs[k]
        b2 = _real(acc, "B2")
    report = CoeffReport(b1, b2, sq, adj, tuple(bs))
    if check:
        tp = trace_poly(w)
        if tp[n - 2] != b1:
            raise ArithmeticError(f"B1={b1} but the lam^{n - 2} coefficient is {tp[n - 2]}")
        if b2 is not None and tp[n - 4] != b2:
            raise ArithmeticError(f"B2={b2} but the lam^{n - 4} coefficient is {tp[n - 4]}")
    return report


# ---------------------------------------------------------------------------
# numerical bounds

SQRT3 = math.sqrt(3.0)


def _dyadic_points(lo: float, hi: float, samples: int, bits: int = 48) -> list[Fraction]:
    scale = 1 << bits
    if samples == 1:
        xs = [(lo + hi) / 2]
    else:
        xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    # truncate toward zero so points never leave [lo, hi] when lo = -hi
    return [Fraction(math.trunc(x * scale), scale) for x in xs]


def exact_dyadic_value(p: IntPoly, z: Fraction) -> float:
    """``p(z)`` for dyadic ``z``, computed exactly and rounded once."""
    deg = p.degree
    if deg < 0:
        return 0.0
    k, den = z.numerator, z.denominator
    num = 0
    scale = 1
    for c in reversed(p.coeffs):
        num = num * k + c * scale
        scale *= den
    return float(Fraction(num, scale // den))


def sup_on_interval(p: IntPoly, samples: int = 1000) -> float:
    """Max of ``|p(z)|`` over dyadic samples of ``[-sqrt3, sqrt3]``.

    Evaluation is exact; trace polynomials have large alternating
    coefficients and float Horner cancels badly near the ends.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    return max(abs(exact_dyadic_value(p, z)) for z in _dyadic_points(-SQRT3, SQRT3, samples))


def sup_check(w: Word, samples: int = 1000) -> float:
    return sup_on_interval(trace_poly(w), samples)


SIGMA0 = LAM * P_MINUS2**5 * F_QUARTIC**12
SIGMA1 = LAM * F_QUARTIC**3

LAMBDA0 = Fraction(1, 10)
LAMBDA1 = Fraction(23, 20)


@dataclass(frozen=True)
class BoundConstants:
    f_lambda0: float
    f_lambda1: float
    g_lambda0: float
    g_lambda1: float
    sigma0: float
    sigma1: float
    inequalities: dict[str, bool]

    def rows(self) -> list[tuple[str, float]]:
        return [
            ("|f(0.1)|", self.f_lambda0),
            ("|f(1.15)|", self.f_lambda1),
            ("|g(0.1)|", self.g_lambda0),
            ("|g(1.15)|", self.g_lambda1),
            ("|sigma0(0.1)|", self.sigma0),
            ("|sigma1(1.15)|", self.sigma1),
        ]

    @property
    def all_hold(self) -> bool:
        return all(self.inequalities.values())


def bound_constants() -> BoundConstants:
    """Magnitudes at 0.1 and 1.15 that rule out large ``c`` and ``e``.

    The inequalities are decided in exact rational arithmetic.
    """
    vals = {
        "f0": abs(F_QUARTIC.eval_fraction(LAMBDA0)),
        "f1": abs(F_QUARTIC.eval_fraction(LAMBDA1)),
        "g0": abs(G_SEXTIC.eval_fraction(LAMBDA0)),
        "g1": abs(G_SEXTIC.eval_fraction(LAMBDA1)),
        "s0": abs(SIGMA0.eval_fraction(LAMBDA0)),
        "s1": abs(SIGMA1.eval_fraction(LAMBDA1)),
    }
    ineq = {
        "|f(1.15)| > 1": vals["f1"] > 1,
        "|f(0.1)| < 1": vals["f0"] < 1,
        "|g(0.1)| > 1": vals["g0"] > 1,
        "|g(1.15)| > 1": vals["g1"] > 1,
        "|sigma0| > 2": vals["s0"] > 2,
        "|sigma1| > 2": vals["s1"] > 2,
    }
    return BoundConstants(
        float(vals["f0"]),
        float(vals["f1"]),
        float(vals["g0"]),
        float(vals["g1"]),
        float(vals["s0"]),
        float(vals["s1"]),
        ineq,
    )


MAX_C = 4


@dataclass(frozen=True, order=True)
class Params:
    c: int
    e: int

    @property
    def ell(self) -> int:
        return 1 + 2 * self.c + 4 * self.e


def admissible_params(max_len: int | None = None) -> list[Params]:
    """All ``(c, e)`` with ``c <= 4`` and ``max(0, c-2) <= e <= 2c+2``."""
    out = [
        Params(c, e)
        for c in range(MAX_C + 1)
        for e in range(max(0, c - 2), 2 * c + 3)
    ]
    if max_len is not None:
        out = [p for p in out if p.ell <= max_len]
    return sorted(out, key=lambda p: (p.ell, p.c))


def is_admissible(c: int, e: int) -> bool:
    return 0 <= c <= MAX_C and max(0, c - 2) <= e <= 2 * c + 2


FIGURE_POLYS = {"f": F_QUARTIC, "g": G_SEXTIC, "sigma0": SIGMA0}


def figure_data(which: str, start: float, stop: float, step: float) -> list[tuple[float, float]]:
    """``(x, y)`` samples of ``f``, ``g`` or ``sigma0`` from start to stop inclusive."""
    if step <= 0:
        raise ValueError("step must be positive")
    try:
        poly = FIGURE_POLYS[which]
    except KeyError:
        raise ValueError(f"unknown curve {which!r}; choose from {sorted(FIGURE_POLYS)}") from None
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    rows = []
    for i in range(max(n, 0)):
        x = start + i * step
        rows.append((x, float(poly.eval_fraction(Fraction(x)))))
    return rows
