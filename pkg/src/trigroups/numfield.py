"""Arithmetic in Q[t]/(t^6 - 3t^3 + 1) and 3x3 matrices over it."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

# t^6 = 3t^3 - 1
MODULUS = (1, 0, 0, -3, 0, 0, 1)
DEGREE = 6


class NonInvertible(ArithmeticError):
    """An element shares a nontrivial factor with the modulus."""

    def __init__(self, element, gcd):
        super().__init__(f"{element} is not invertible; gcd with modulus is {gcd}")
        self.gcd = gcd


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(c: list, m: Sequence) -> list:
    c = list(c)
    dm = len(m) - 1
    lead = Fraction(m[-1])
    for k in range(len(c) - 1, dm - 1, -1):
        q = c[k] / lead if lead != 1 else c[k]
        if q:
            for i, mc in enumerate(m):
                c[k - dm + i] -= q * mc
    return _trim(c[:dm] if len(c) > dm else c)


def _polymul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] / b[-1]
        q[k - db] = c
        if c:
            for i, bc in enumerate(b):
                a[k - db + i] -= c * bc
    return _trim(q), _trim(a[:db])


def _polysub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class NumField:
    """Residue of a rational polynomial modulo ``t^6 - 3t^3 + 1``."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        self.c = tuple(_polymod([Fraction(x) for x in coeffs], MODULUS))

    @classmethod
    def t(cls) -> NumField:
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NumField((other,))
        if not isinstance(other, NumField):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"NumField({[str(x) for x in self.c]})"

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            x = self.c[k]
            if x == 0:
                continue
            mag = abs(x)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if x < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out

    @staticmethod
    def _coerce(x) -> NumField:
        return x if isinstance(x, NumField) else NumField((x,))

    def __add__(self, other):
        o = self._coerce(other).c
        a = self.c
        n = max(len(a), len(o))
        return NumField((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return NumField(-x for x in self.c)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return NumField(_polymul(self.c, o.c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = NumField((1,)), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            base = base * base
        return out

    def inverse(self) -> NumField:
        """Extended Euclid against the modulus."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = [Fraction(x) for x in MODULUS], list(self.c)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        if len(r0) != 1:
            lead = r0[-1]
            raise NonInvertible(self, NumField._monic_str(r0, lead))
        return NumField(x / r0[0] for x in s0)

    @staticmethod
    def _monic_str(r, lead) -> str:
        return str([str(x / lead) for x in r])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()


Mat3 = tuple  # 3-tuple of 3-tuples of NumField


def mat3(rows) -> Mat3:
    return tuple(tuple(NumField._coerce(x) if not isinstance(x, NumField) else x for x in row) for row in rows)


def mat3_identity(n: int = 3) -> Mat3:
    return tuple(tuple(NumField((1 if i == j else 0,)) for j in range(n)) for i in range(n))


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    cols = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), NumField()) for col in cols)
        for row in a
    )


def mat_add(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_sub(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(a: Mat3, k) -> Mat3:
    return tuple(tuple(x * k for x in r) for r in a)


def mat_pow(a: Mat3, n: int) -> Mat3:
    out = mat3_identity(len(a))
    for _ in range(n):
        out = mat_mul(out, a)
    return out


def mat_trace(a: Mat3) -> NumField:
    return sum((a[i][i] for i in range(len(a))), NumField())


def mat_det(a: Mat3) -> NumField:
    (p, q, r), (s, u, v), (w, x, y) = a
    return p * (u * y - v * x) - q * (s * y - v * w) + r * (s * x - u * w)


def mat_rank(a) -> int:
    """Rank by Gaussian elimination over the field.

    Raises NonInvertible if a nonzero pivot has a common factor with the
    modulus, which would mean the modulus is reducible.
    """
    rows = [list(r) for r in a]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(nrows):
            if i != rank and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_is_identity(a) -> bool:
    return a == mat3_identity(len(a))
