"""Independent reference implementations used only by the tests.

None of these share code with the package beyond the ``Word`` container.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from trigroups.words import Word


# -- trace polynomial by interpolation over a rational representation ------
#
# X = [[0, -1/k], [k, 0]], Y = [[a, 1], [a - a^2 - 1, 1 - a]] have tr X = 0,
# tr Y = 1, det = 1 and tr XY = k + (a^2 - a + 1)/k.  With a = 2 the values
# lam_k = k + 3/k are distinct for k >= 2.

def _mul(m, n):
    return (
        m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
        m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3],
    )


def _rational_trace(alphas, k: int, a: int = 2) -> Fraction:
    X = (Fraction(0), Fraction(-1, k), Fraction(k), Fraction(0))
    Y = (Fraction(a), Fraction(1), Fraction(a - a * a - 1), Fraction(1 - a))
    Y2 = _mul(Y, Y)
    m = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    for al in alphas:
        m = _mul(m, _mul(X, Y if al == 1 else Y2))
    return m[0] + m[3]


def _interpolate(xs, ys) -> list[Fraction]:
    """Coefficients (ascending) of the Lagrange interpolant."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xs[j] * basis[d + 1]
            denom *= xs[i] - xs[j]
        for d in range(n):
            coeffs[d] += ys[i] * basis[d] / denom
    return coeffs


def interpolated_trace(w: Word) -> list[int]:
    n = len(w)
    ks = range(2, n + 3)
    xs = [k + Fraction(3, k) for k in ks]
    ys = [_rational_trace(w.alphas, k) for k in ks]
    coeffs = _interpolate(xs, ys)
    assert all(c.denominator == 1 for c in coeffs), coeffs
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


# -- naive search over every exponent sequence ------------------------------

def runs(alphas) -> tuple[int, ...]:
    """Cyclic run lengths, starting at a run boundary."""
    n = len(alphas)
    start = next((i for i in range(n) if alphas[i] != alphas[i - 1]), None)
    if start is None:
        return (n,)
    rot = alphas[start:] + alphas[:start]
    out, count = [], 1
    for i in range(1, n):
        if rot[i] == rot[i - 1]:
            count += 1
        else:
            out.append(count)
            count = 1
    out.append(count)
    return tuple(out)


def bracelet_min(seq) -> tuple[int, ...]:
    seq = tuple(seq)
    cands = []
    for s in (seq, seq[::-1]):
        for i in range(len(s)):
            cands.append(s[i:] + s[:i])
    return min(cands)


def naive_search(c: int, e: int, trace_fn) -> set[tuple[int, ...]]:
    ell = 1 + 2 * c + 4 * e
    target = naive_target(c, e)
    found = set()
    for alphas in product((1, 2), repeat=ell):
        if alphas[0] != 1:
            continue  # a rotation starts with 1 unless the word is all 2s; its complement is all 1s
        if trace_fn(Word(alphas)) == target:
            found.add(bracelet_min(runs(alphas)))
    return found


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def naive_target(c: int, e: int) -> list[int]:
    p = [0, 1]
    for _ in range(c):
        p = _pmul(p, [-2, 0, 1])
    for _ in range(e):
        p = _pmul(p, [1, 0, -3, 0, 1])
    return p


# -- pieces, letter by letter -----------------------------------------------

_INV = {"x": "x", "y": "Y", "Y": "y"}


def letters(alphas) -> str:
    return "".join("xy" if a == 1 else "xY" for a in alphas)


def naive_is_piece(alphas, frag) -> bool:
    s = letters(alphas)
    inv = "".join(_INV[ch] for ch in reversed(s))
    conj = {t[i:] + t[:i] for t in (s, inv) for i in range(len(t))}
    u = letters(frag)
    return len({v for v in conj if v.startswith(u)}) >= 2
