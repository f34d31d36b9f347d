"""Exact rings used by the trace machinery.

* :class:`IntPoly` -- univariate integer polynomials in ``lam`` (ascending
  coefficient tuples, ``()`` is zero).
* :class:`QuadExt` -- ``p + q*s`` in ``Z[lam][s]/(s^2 + lam*s + 1)``; 2x2
  matrices over it realise generators with traces ``0, 1, lam``.
* :class:`QuadOrder` -- ``a + b*u`` with ``u^2 = A*u + B`` (``Z[sqrt2]`` is
  ``(0, 2)``, ``Z[phi]`` is ``(1, 1)``).
* :class:`Cyclo` -- ``m + n*w`` in ``Z[w]``, ``w = exp(i*pi/3)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


# Schoolbook below this size; Kronecker substitution above.
_KRONECKER_MIN = 12


def _pack(coeffs: Sequence[int], bits: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = (v << bits) + c
    return v


def _unpack(v: int, bits: int, n: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(n):
        r = v & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        v = (v - r) >> bits
    return out


def _mul_coeffs(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return _trim(out)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    prod = _pack(a, bits) * _pack(b, bits)
    return _trim(_unpack(prod, bits, len(a) + len(b) - 1))


class IntPoly:
    """Integer polynomial in ``lam``; immutable, hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def lam(cls) -> IntPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        return self.pretty()

    @staticmethod
    def _coerce(x) -> IntPoly:
        return x if isinstance(x, IntPoly) else IntPoly.const(x)

    def __add__(self, other):
        o = self._coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return IntPoly((a[i] if i < len(a) else 0) + (o[i] if i < len(o) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        p = IntPoly.__new__(IntPoly)
        p.coeffs = _mul_coeffs(self.coeffs, other.coeffs)
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``lam**k``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def divexact(self, den: IntPoly) -> IntPoly:
        """Return ``q`` with ``q * den == self``; raise NotDivisible otherwise."""
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dl = den.lead()
        dd = den.degree
        if len(rem) - 1 < dd:
            if rem:
                raise NotDivisible(f"{self} is not divisible by {den}")
            return IntPoly()
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, dl)
            if r:
                raise NotDivisible(f"{self} is not divisible by {den}")
            quot[k - dd] = q
            for i, dc in enumerate(den.coeffs):
                rem[k - dd + i] -= q * dc
        if any(rem):
            raise NotDivisible(f"{self} is not divisible by {den}")
        return IntPoly(quot)

    def __call__(self, z):
        """Horner evaluation; works for floats, Fractions and ring elements."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_float(self, z: float) -> float:
        return float(self(float(z)))

    def eval_quad(self, u: QuadOrder) -> QuadOrder:
        acc = QuadOrder(0, 0, u.A, u.B)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def eval_fraction(self, z: Fraction) -> Fraction:
        return Fraction(self(Fraction(z)))

    def pretty(self, var: str = "λ") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def to_list_str(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_list_str(cls, text: str) -> IntPoly:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected '[c0,c1,...]', got {text!r}")
        inner = body[1:-1].strip()
        return cls(int(t) for t in inner.split(",")) if inner else cls()


LAM = IntPoly.lam()
ONE = IntPoly.const(1)
ZERO = IntPoly()


class QuadExt:
    """``p + q*s`` with ``s^2 = -lam*s - 1`` over ``Z[lam]``."""

    __slots__ = ("p", "q")

    def __init__(self, p: IntPoly = ZERO, q: IntPoly = ZERO):
        self.p = p if isinstance(p, IntPoly) else IntPoly.const(p)
        self.q = q if isinstance(q, IntPoly) else IntPoly.const(q)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return f"QuadExt({self.p.coeffs}, {self.q.coeffs})"

    def __add__(self, other):
        if isinstance(other, int):
            other = QuadExt(other)
        return QuadExt(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QuadExt(other)
        return QuadExt(self.p - other.p, self.q - other.q)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadExt(self.p * other, self.q * other)
        pp = self.p * other.p
        qq = self.q * other.q
        cross = (self.p + self.q) * (other.p + other.q) - pp - qq
        return QuadExt(pp - qq, cross - (qq.shift(1)))

    __rmul__ = __mul__

    def conj(self) -> QuadExt:
        """Image under ``s -> -lam - s``."""
        return QuadExt(self.p - self.q.shift(1), -self.q)

    def norm(self) -> QuadExt:
        return self * self.conj()


S = QuadExt(ZERO, ONE)

# A 2x2 matrix is a 4-tuple (a, b, c, d) of ring elements, row-major.
Mat2 = tuple


def mat2_mul(m: Mat2, n: Mat2) -> Mat2:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat2_trace(m: Mat2):
    return m[0] + m[3]


def mat2_det(m: Mat2):
    return m[0] * m[3] - m[1] * m[2]


def mat2_identity(one=None) -> Mat2:
    one = QuadExt(ONE) if one is None else one
    zero = one - one
    return (one, zero, zero, one)


def mat2_pow(m: Mat2, n: int) -> Mat2:
    if n < 0:
        raise ValueError("negative power")
    result = mat2_identity(m[0] - m[0] + 1)
    base = m
    while n:
        if n & 1:
            result = mat2_mul(result, base)
        n >>= 1
        if n:
            base = mat2_mul(base, base)
    return result


def mat2_trace_of_product(m: Mat2, n: Mat2):
    """``tr(m @ n)`` without forming the off-diagonal entries."""
    return m[0] * n[0] + m[1] * n[2] + m[2] * n[1] + m[3] * n[3]


# Generators with tr X = 0, tr Y = 1, tr XY = lam, det = 1.
GEN_X: Mat2 = (QuadExt(0), QuadExt(1), QuadExt(-1), QuadExt(0))
GEN_Y: Mat2 = (QuadExt(0), S, QuadExt(LAM, ONE), QuadExt(1))


class QuadOrder:
    """``a + b*u`` in the order ``Z[u]``, ``u^2 = A*u + B``."""

    __slots__ = ("a", "b", "A", "B")

    def __init__(self, a: int, b: int, A: int, B: int):
        self.a, self.b, self.A, self.B = a, b, A, B

    @classmethod
    def gen(cls, A: int, B: int) -> QuadOrder:
        return cls(0, 1, A, B)

    def _same(self, other) -> QuadOrder:
        if isinstance(other, int):
            return QuadOrder(other, 0, self.A, self.B)
        if (other.A, other.B) != (self.A, self.B):
            raise ValueError("elements of different quadratic orders")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            return self.a == other and self.b == 0
        if not isinstance(other, QuadOrder):
            return NotImplemented
        return (self.a, self.b, self.A, self.B) == (other.a, other.b, other.A, other.B)

    def __hash__(self):
        return hash((self.a, self.b, self.A, self.B))

    def __repr__(self):
        return f"QuadOrder({self.a}, {self.b}; u^2={self.A}u+{self.B})"

    def __add__(self, other):
        o = self._same(other)
        return QuadOrder(self.a + o.a, self.b + o.b, self.A, self.B)

    __radd__ = __add__

    def __neg__(self):
        return QuadOrder(-self.a, -self.b, self.A, self.B)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._same(other)
        bd = self.b * o.b
        return QuadOrder(
            self.a * o.a + bd * self.B,
            self.a * o.b + self.b * o.a + bd * self.A,
            self.A,
            self.B,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_float(self) -> float:
        disc = self.A * self.A + 4 * self.B
        u = (self.A + disc**0.5) / 2
        return self.a + self.b * u


SQRT2 = QuadOrder.gen(0, 2)
PHI = QuadOrder.gen(1, 1)


class Cyclo:
    """``m + n*w`` with ``w^2 = w - 1`` (``w`` a primitive sixth root of unity)."""

    __slots__ = ("m", "n")

    def __init__(self, m: int = 0, n: int = 0):
        self.m, self.n = m, n

    def __eq__(self, other):
        if isinstance(other, int):
            return self.m == other and self.n == 0
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self.m == other.m and self.n == other.n

    def __hash__(self):
        return hash((self.m, self.n))

    def __repr__(self):
        return f"Cyclo({self.m}, {self.n})"

    def __add__(self, other):
        if isinstance(other, int):
            other = Cyclo(other)
        return Cyclo(self.m + other.m, self.n + other.n)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(-self.m, -self.n)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Cyclo(other)
        return Cyclo(self.m - other.m, self.n - other.n)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclo(self.m * other, self.n * other)
        nn = self.n * other.n
        return Cyclo(self.m * other.m - nn, self.m * other.n + self.n * other.m + nn)

    __rmul__ = __mul__

    def conj(self) -> Cyclo:
        return Cyclo(self.m + self.n, -self.n)

    def is_real(self) -> bool:
        # imaginary part is n*sqrt(3)/2
        return self.n == 0

    def to_complex(self) -> complex:
        return self.m + self.n * complex(0.5, 3**0.5 / 2)


W6 = Cyclo(0, 1)


def cyclo_root(k: int) -> Cyclo:
    """``exp(i*pi*k/3)``."""
    out = Cyclo(1)
    for _ in range(k % 6):
        out = out * W6
    return out
