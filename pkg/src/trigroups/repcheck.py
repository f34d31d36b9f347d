"""Exact check of a 3-dimensional representation of
``<x, y | x^3 = y^3 = xyxy^2xy^2x^2yxyx^2yx^2y^2 = 1>`` over
``Q[t]/(t^6 - 3t^3 + 1)``, and of the eigen-data that makes its image
non-elementary."""

from __future__ import annotations

from dataclasses import dataclass, field

from .numfield import (
    NumField,
    mat3,
    mat3_identity,
    mat_add,
    mat_det,
    mat_is_identity,
    mat_mul,
    mat_pow,
    mat_rank,
    mat_sub,
    mat_trace,
)

T = NumField.t()

A = -3 * T**4 + 8 * T
B = -4 * T**4 + 11 * T
C = 2 * T**3 - 6
D = -5 * T**5 + 14 * T**2
E = -7 * T**5 + 19 * T**2

X = mat3([[A, B, C], [0, 0, 1], [D, E, -A]])
Y = mat3([[D, E, -A], [3 * (B * T - D), -D, -C * T], [1, 0, 0]])

# x y x y^2 x y^2 x^2 y x y x^2 y x^2 y^2
RELATOR = ((X, 1), (Y, 1), (X, 1), (Y, 2), (X, 1), (Y, 2), (X, 2), (Y, 1), (X, 1), (Y, 1), (X, 2), (Y, 1), (X, 2), (Y, 2))

EV1 = mat3([[1], [1], [4 * T]])
EV2 = mat3([[1], [-1], [0]])
Q = mat3([[2 * T, 2 * T, -1]])


@dataclass
class CheckResult:
    name: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append((label, ok, detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self) -> list[str]:
        out = []
        for label, ok, detail in self.checks:
            line = f"{'PASS' if ok else 'FAIL'} {self.name}: {label}"
            out.append(line + (f" ({detail})" if detail else ""))
        return out


def _fmt(m) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m) + "]"


def word_product(syllables) -> tuple:
    out = mat3_identity()
    for g, k in syllables:
        out = mat_mul(out, mat_pow(g, k))
    return out


def products():
    m = mat_mul(X, Y)
    n = mat_mul(Y, X)
    return m, n


def verify_relators() -> CheckResult:
    r = CheckResult("relators")
    for label, value in (("x^3", mat_pow(X, 3)), ("y^3", mat_pow(Y, 3)), ("long relator", word_product(RELATOR))):
        ok = mat_is_identity(value)
        r.add(f"{label} = Id", ok, "" if ok else _fmt(value))
    return r


def verify_eigenstructure() -> CheckResult:
    r = CheckResult("eigenstructure")
    m, _ = products()
    ident = mat3_identity()
    rk_minus = mat_rank(mat_sub(m, ident))
    rk_plus = mat_rank(mat_add(m, ident))
    r.add("rank(m - Id) = 2", rk_minus == 2, f"got {rk_minus}")
    r.add("rank(m + Id) = 2", rk_plus == 2, f"got {rk_plus}")
    mv1 = mat_mul(m, EV1)
    mv2 = mat_mul(m, EV2)
    r.add("m ev1 = ev1", mv1 == EV1, _fmt(mv1))
    r.add("m ev2 = -ev2", mv2 == mat_sub(mat3([[0], [0], [0]]), EV2), _fmt(mv2))
    tr = mat_trace(m)
    det = mat_det(m)
    r.add("tr(m) = -1", tr == -1, str(tr))
    r.add("det(m) = 1", det == 1, str(det))
    return r


def verify_nonelementary_witness() -> CheckResult:
    r = CheckResult("witness")
    _, n = products()
    q1 = mat_mul(Q, EV1)[0][0]
    q2 = mat_mul(Q, EV2)[0][0]
    r.add("q ev1 = 0", q1.is_zero(), str(q1))
    r.add("q ev2 = 0", q2.is_zero(), str(q2))
    a = mat_mul(Q, mat_mul(n, EV1))[0][0]
    b = mat_mul(Q, mat_mul(n, EV2))[0][0]
    r.add("q n ev1 = t^4+t", a == T**4 + T and not a.is_zero(), str(a))
    r.add("q n ev2 = t^4-t", b == T**4 - T and not b.is_zero(), str(b))
    return r


def verify_all() -> list[CheckResult]:
    return [verify_relators(), verify_eigenstructure(), verify_nonelementary_witness()]
