"""Exhaustive search for words with trace polynomial
``lam (lam^2-2)^c (lam^4-3lam^2+1)^e``.

Candidates are block-length lists of ``t = 2e+2`` entries, built from a
composition ``L`` of ``2c+2e-1`` into ``c+e`` parts and a position set
``C`` of size ``e+2-c``: every entry of ``L`` is raised by one and ones
are placed at the positions in ``C``.  Only lists that are their own
dihedral minimum are screened, so each equivalence class is tested once.

The inner loops run over numpy arrays: one row per candidate, blocks of
rows sharing the same ``C``.
"""

from __future__ import annotations

import logging
import math
import os
import time
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterator, Sequence

import numpy as np

from .polys import PHI, SQRT2, IntPoly, QuadOrder
from .trace import _block_matrix, is_admissible, target_poly, trace_poly, admissible_params
from .words import Word, format_blocks, print_word, word_from_lengths

log = logging.getLogger(__name__)

SCREENS = ("exact", "float", "none")
DESK_MAX_LEN = 33
MAX_ADMISSIBLE_LEN = 49
CHECKPOINT_EVERY = 10**7


@dataclass(frozen=True)
class SearchParams:
    c: int
    e: int
    workers: int = 1
    screen: str = "exact"
    tolerance: float = 1e-6
    force: bool = False
    huge: bool = False

    def __post_init__(self):
        if self.c < 0 or self.e < 0:
            raise ValueError("c and e must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.screen not in SCREENS:
            raise ValueError(f"screen must be one of {SCREENS}")
        if not self.force and not is_admissible(self.c, self.e):
            raise ValueError(f"(c,e)=({self.c},{self.e}) is outside the admissible region; use force")
        if self.ell > DESK_MAX_LEN and not self.huge:
            raise ValueError(f"length {self.ell} > {DESK_MAX_LEN} needs the huge flag")

    @property
    def ell(self) -> int:
        return 1 + 2 * self.c + 4 * self.e

    @property
    def t(self) -> int:
        return 2 * self.e + 2

    @property
    def ones(self) -> int:
        return self.e + 2 - self.c


@dataclass(frozen=True, order=True)
class Hit:
    lengths: tuple[int, ...]
    provenance: tuple[int, int] = field(compare=False, default=(-1, -1))

    @property
    def word(self) -> Word:
        return word_from_lengths(self.lengths)

    @property
    def text(self) -> str:
        return print_word(self.word)

    def poly(self) -> IntPoly:
        return trace_poly(self.word)


@dataclass
class Counters:
    raw: int = 0
    canonical: int = 0
    screened: int = 0
    exact_checked: int = 0

    def __iadd__(self, other: Counters):
        self.raw += other.raw
        self.canonical += other.canonical
        self.screened += other.screened
        self.exact_checked += other.exact_checked
        return self

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.raw, self.canonical, self.screened, self.exact_checked)


@dataclass
class SearchReport:
    params: SearchParams
    hits: list[Hit]
    counters: Counters
    wall_time: float = 0.0

    @property
    def hit_lengths(self) -> list[tuple[int, ...]]:
        return [h.lengths for h in self.hits]


# ---------------------------------------------------------------------------
# enumeration


def enumerate_L(c: int, e: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``2c+2e-1`` into ``c+e`` parts, lexicographically."""
    k = c + e
    if k < 1:
        raise ValueError("c + e must be at least 1")
    n = 2 * c + 2 * e - 1
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def count_L(c: int, e: int) -> int:
    return math.comb(2 * c + 2 * e - 2, c + e - 1)


def enumerate_C(c: int, e: int) -> list[tuple[int, ...]]:
    """Subsets of ``{1, ..., 2e+2}`` of size ``e+2-c`` in colex order."""
    k = e + 2 - c
    if k < 0:
        return []
    subsets = combinations(range(1, 2 * e + 3), k)
    return sorted(subsets, key=lambda s: s[::-1])


def assemble(L: Sequence[int], C: Sequence[int], c: int | None = None, e: int | None = None) -> tuple[int, ...]:
    """Raise each entry of ``L`` by one and put ones at the 1-based positions ``C``."""
    t = len(L) + len(C)
    if c is not None and e is not None:
        if len(L) != c + e or len(C) != e + 2 - c:
            raise ValueError(f"need |L|={c + e} and |C|={e + 2 - c}, got {len(L)} and {len(C)}")
    if t == 0:
        raise ValueError("empty candidate")
    if any(p < 1 or p > t for p in C) or len(set(C)) != len(C):
        raise ValueError(f"positions {C} do not fit a list of length {t}")
    ones = set(C)
    it = iter(L)
    return tuple(1 if pos in ones else next(it) + 1 for pos in range(1, t + 1))


# ---------------------------------------------------------------------------
# canonical mask


def _transforms(t: int) -> list[np.ndarray]:
    idx = np.arange(t)
    out = [(idx + r) % t for r in range(1, t)]
    out += [(t - 1 - (idx + r) % t) for r in range(t)]
    return out


def _encode(digits: np.ndarray, bits: int) -> list[np.ndarray]:
    per = max(1, 62 // bits)
    chunks = []
    for lo in range(0, digits.shape[1], per):
        code = np.zeros(digits.shape[0], dtype=np.int64)
        for j in range(lo, min(lo + per, digits.shape[1])):
            code = (code << bits) | digits[:, j]
        chunks.append(code)
    return chunks


def _lex_le(a: list[np.ndarray], b: list[np.ndarray]) -> np.ndarray:
    le = np.ones(a[0].shape[0], dtype=bool)
    for x, y in zip(reversed(a), reversed(b)):
        le = (x < y) | ((x == y) & le)
    return le


def canonical_mask(rows: np.ndarray) -> np.ndarray:
    """Which rows are lexicographically minimal in their dihedral orbit."""
    n, t = rows.shape
    keep = np.ones(n, dtype=bool)
    if n == 0 or t == 1:
        return keep
    rows = rows.astype(np.int64, copy=False)
    bits = max(1, int(rows.max()).bit_length())
    alive = np.arange(n)
    cur = rows
    for perm in _transforms(t):
        if alive.size == 0:
            break
        own = _encode(cur, bits)
        ok = _lex_le(own, _encode(cur[:, perm], bits))
        if not ok.all():
            keep[alive[~ok]] = False
            alive = alive[ok]
            cur = cur[ok]
    return keep


# ---------------------------------------------------------------------------
# screening kernels


@lru_cache(maxsize=None)
def _block_table(A: int, B: int, max_len: int) -> np.ndarray:
    """``(X Y^k)^n`` at ``lam = u`` for k in {1,2}, n <= max_len.

    Shape ``(2, max_len+1, 4, 4)``: kind, power, matrix entry (row-major),
    coordinates ``(p0, p1, q0, q1)`` of ``(p0 + p1 u) + (q0 + q1 u) s``.
    """
    table = np.zeros((2, max_len + 1, 4, 4), dtype=np.int64)
    u = QuadOrder.gen(A, B)
    for kind in (1, 2):
        for n in range(max_len + 1):
            for k, entry in enumerate(_block_matrix(kind, n)):
                p = entry.p.eval_quad(u)
                q = entry.q.eval_quad(u)
                table[kind - 1, n, k] = (p.a, p.b, q.a, q.b)
    return table


# entries far below 2**63 so that a product of two cannot overflow
_SAFE = 1 << 28


def _omul(a0, a1, b0, b1, A, B):
    t = a1 * b1
    return a0 * b0 + t * B, a0 * b1 + a1 * b0 + t * A


def _rmul(x, y, A, B):
    p0, p1, q0, q1 = x
    r0, r1, s0, s1 = y
    pp0, pp1 = _omul(p0, p1, r0, r1, A, B)
    qq0, qq1 = _omul(q0, q1, s0, s1, A, B)
    c0, c1 = _omul(p0, p1, s0, s1, A, B)
    d0, d1 = _omul(q0, q1, r0, r1, A, B)
    # u * qq = qq1*B + (qq0 + qq1*A) u
    uq0, uq1 = qq1 * B, qq0 + qq1 * A
    return (pp0 - qq0, pp1 - qq1, c0 + d0 - uq0, c1 + d1 - uq1)


def _radd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _matmul_ring(m, n, A, B):
    a, b, c, d = m
    e, f, g, h = n
    return (
        _radd(_rmul(a, e, A, B), _rmul(b, g, A, B)),
        _radd(_rmul(a, f, A, B), _rmul(b, h, A, B)),
        _radd(_rmul(c, e, A, B), _rmul(d, g, A, B)),
        _radd(_rmul(c, f, A, B), _rmul(d, h, A, B)),
    )


class ScreenOverflow(OverflowError):
    pass


def batch_trace_at(rows: np.ndarray, A: int, B: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Exact trace of each block-list word at ``lam = u``, ``u^2 = A u + B``.

    Returns the four coordinate arrays ``(p0, p1, q0, q1)``; for a genuine
    word trace ``q0 = q1 = 0``.  Entries stay bounded because both real
    embeddings of ``u`` lie inside ``(-2, 2)``; the guard raises if that
    ever fails.
    """
    n, t = rows.shape
    table = _block_table(A, B, int(rows.max()))
    def gather(kind: int, col: np.ndarray):
        blk = table[kind - 1][col]  # (n, 4, 4)
        return tuple(tuple(blk[:, k, i] for i in range(4)) for k in range(4))
    m = gather(1, rows[:, 0])
    for j in range(1, t):
        m = _matmul_ring(m, gather(1 + (j % 2), rows[:, j]), A, B)
        peak = max(int(np.abs(coord).max()) for entry in m for coord in entry)
        if peak > _SAFE:
            raise ScreenOverflow(f"coordinate {peak} exceeds the safe bound")
    return _radd(m[0], m[3])


def _complex_blocks(lam: complex, max_len: int) -> np.ndarray:
    s = (-lam + np.sqrt(complex(lam * lam - 4))) / 2
    X = np.array([[0, 1], [-1, 0]], dtype=complex)
    Y = np.array([[0, s], [lam + s, 1]], dtype=complex)
    out = np.zeros((2, max_len + 1, 2, 2), dtype=complex)
    for kind, base in ((1, X @ Y), (2, X @ Y @ Y)):
        m = np.eye(2, dtype=complex)
        for n in range(max_len + 1):
            out[kind - 1, n] = m
            m = m @ base
    return out


def batch_trace_float(rows: np.ndarray, lam: float) -> np.ndarray:
    n, t = rows.shape
    table = _complex_blocks(lam, int(rows.max()))
    m = table[0][rows[:, 0]]
    for j in range(1, t):
        m = m @ table[j % 2][rows[:, j]]
    return (m[:, 0, 0] + m[:, 1, 1]).real


MOD_PRIME = (1 << 31) - 1  # p = 3 mod 4, so square roots are one pow()
MOD_POINTS = 6


@lru_cache(maxsize=None)
def _mod_points(count: int = MOD_POINTS) -> tuple[tuple[int, int], ...]:
    """Pairs ``(lam, s)`` in F_p with ``s^2 + lam s + 1 = 0``."""
    p = MOD_PRIME
    out = []
    lam = 3
    while len(out) < count:
        disc = (lam * lam - 4) % p
        if pow(disc, (p - 1) // 2, p) == 1:
            root = pow(disc, (p + 1) // 4, p)
            s = (-lam + root) * pow(2, -1, p) % p
            assert (s * s + lam * s + 1) % p == 0
            out.append((lam, s))
        lam += 1
    return tuple(out)


@lru_cache(maxsize=None)
def _mod_block_table(max_len: int) -> np.ndarray:
    """``(X Y^k)^n mod p`` at each point; shape ``(points, 2, max_len+1, 2, 2)``."""
    p = MOD_PRIME
    pts = _mod_points()
    table = np.zeros((len(pts), 2, max_len + 1, 2, 2), dtype=np.int64)
    for i, (lam, s) in enumerate(pts):
        X = ((0, 1), (p - 1, 0))
        Y = ((0, s), ((lam + s) % p, 1))
        def mul(a, b):
            return tuple(
                tuple(sum(a[r][k] * b[k][q] for k in range(2)) % p for q in range(2)) for r in range(2)
            )
        for kind, base in ((1, mul(X, Y)), (2, mul(X, mul(Y, Y)))):
            m = ((1, 0), (0, 1))
            for n in range(max_len + 1):
                table[i, kind - 1, n] = m
                m = mul(m, base)
    return table


def batch_trace_mod(rows: np.ndarray) -> np.ndarray:
    """Trace of each word modulo ``p`` at every point; shape ``(n, points)``."""
    p = MOD_PRIME
    n, t = rows.shape
    table = _mod_block_table(int(rows.max()))
    npts = table.shape[0]
    pt = np.arange(npts)[None, :]
    m = table[pt, 0, rows[:, 0][:, None]]  # (n, points, 2, 2)
    for j in range(1, t):
        b = table[pt, j % 2, rows[:, j][:, None]]
        m = np.einsum("nkij,nkjl->nkil", m, b) % p
    return (m[..., 0, 0] + m[..., 1, 1]) % p


def _mod_target(c: int, e: int) -> np.ndarray:
    target = target_poly(c, e)
    return np.array([target(lam) % MOD_PRIME for lam, _ in _mod_points()], dtype=np.int64)


# a generic evaluation point for the float screen
GENERIC_POINT = 1.2


def screen_mask(rows: np.ndarray, c: int, e: int, mode: str = "exact", tolerance: float = 1e-6) -> np.ndarray:
    """Necessary conditions for ``tau == target``.

    ``exact`` tests exact zeros at ``sqrt2`` and ``phi`` (when the target
    has those roots) and then compares values at a few points modulo a
    prime; it never rejects a true match.  ``float`` compares values at a
    generic point and the roots within ``tolerance``.
    """
    n = rows.shape[0]
    keep = np.ones(n, dtype=bool)
    if mode == "none" or n == 0:
        return keep
    if mode == "exact":
        for active, (A, B) in ((c > 0, (0, 2)), (e > 0, (1, 1))):
            if not active or not keep.any():
                continue
            idx = np.flatnonzero(keep)
            p0, p1, q0, q1 = batch_trace_at(rows[idx], A, B)
            if (q0 != 0).any() or (q1 != 0).any():
                raise ArithmeticError("nonzero s-component in screened trace")
            keep[idx[(p0 != 0) | (p1 != 0)]] = False
        idx = np.flatnonzero(keep)
        if idx.size:
            got = batch_trace_mod(rows[idx])
            keep[idx[(got != _mod_target(c, e)[None, :]).any(axis=1)]] = False
        return keep
    if mode == "float":
        target = target_poly(c, e)
        points = [GENERIC_POINT]
        if c > 0:
            points.append(math.sqrt(2.0))
        if e > 0:
            points.append((1 + math.sqrt(5.0)) / 2)
        for lam in points:
            idx = np.flatnonzero(keep)
            if idx.size == 0:
                break
            want = float(target.eval_fraction(Fraction(lam)))  # float Horner cancels at high degree
            got = batch_trace_float(rows[idx], lam)
            keep[idx[np.abs(got - want) > tolerance]] = False
        return keep
    raise ValueError(f"unknown screen mode {mode!r}")


def screen(lengths: Sequence[int], c: int, e: int, mode: str = "exact", tolerance: float = 1e-6) -> bool:
    rows = np.asarray([tuple(lengths)], dtype=np.int64)
    return bool(screen_mask(rows, c, e, mode, tolerance)[0])


# ---------------------------------------------------------------------------
# worker


_SCREEN_BATCH = 1 << 15


@dataclass
class _Partial:
    counters: Counters
    hits: list[Hit]


def _process(c: int, e: int, mode: str, tol: float, L_rows: np.ndarray, L_start: int,
             C_sets: list[tuple[int, ...]]) -> _Partial:
    t = 2 * e + 2
    ones = e + 2 - c
    target = target_poly(c, e)
    counters = Counters(raw=L_rows.shape[0] * len(C_sets))
    hits: list[Hit] = []
    pend_rows: list[np.ndarray] = []
    pend_prov: list[np.ndarray] = []
    pending = 0

    def flush():
        nonlocal pending
        if not pend_rows:
            return
        rows = np.concatenate(pend_rows)
        prov = np.concatenate(pend_prov)
        pend_rows.clear()
        pend_prov.clear()
        pending = 0
        mask = screen_mask(rows, c, e, mode, tol)
        survivors = np.flatnonzero(mask)
        counters.screened += survivors.size
        for i in survivors:
            lengths = tuple(int(x) for x in rows[i])
            counters.exact_checked += 1
            if trace_poly(word_from_lengths(lengths)) == target:
                hits.append(Hit(lengths, (int(prov[i, 0]), int(prov[i, 1]))))

    lifted = L_rows.astype(np.int64) + 1
    n = lifted.shape[0]
    for ci, C in enumerate(C_sets):
        pos = [p - 1 for p in C]
        if ones > 0 and 0 not in pos:
            continue  # a canonical list starts with its minimum, 1
        rows = np.ones((n, t), dtype=np.int64)
        free = [j for j in range(t) if j not in set(pos)]
        rows[:, free] = lifted
        mask = canonical_mask(rows)
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            continue
        counters.canonical += idx.size
        pend_rows.append(rows[idx])
        pend_prov.append(np.stack([idx + L_start, np.full(idx.size, ci)], axis=1))
        pending += idx.size
        if pending >= _SCREEN_BATCH:
            flush()
    flush()
    return _Partial(counters, hits)


def _work(args) -> _Partial:
    return _process(*args)


def _L_array(c: int, e: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    rows = list(islice(enumerate_L(c, e), start, stop))
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), c + e)


def _split(n: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n))
    bounds = [n * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts) if bounds[i] < bounds[i + 1]]


def _run_chunk(p: SearchParams, L_rows: np.ndarray, L_start: int, C_sets, pool) -> list[_Partial]:
    jobs = [
        (p.c, p.e, p.screen, p.tolerance, L_rows[a:b], L_start + a, C_sets)
        for a, b in _split(L_rows.shape[0], p.workers)
    ]
    if pool is None:
        return [_work(j) for j in jobs]
    return list(pool.map(_work, jobs))


# ---------------------------------------------------------------------------
# checkpoints


def write_checkpoint(path: str, p: SearchParams, next_L: int, counters: Counters, hits: list[Hit]) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"c={p.c} e={p.e} screen={p.screen}\n")
        fh.write(f"last_completed_L={next_L - 1}\n")
        fh.write("counters=" + ",".join(str(x) for x in counters.as_tuple()) + "\n")
        for h in hits:
            fh.write(f"hit={format_blocks(h.lengths)};{h.provenance[0]},{h.provenance[1]}\n")
    os.replace(tmp, path)


def read_checkpoint(path: str, p: SearchParams) -> tuple[int, Counters, list[Hit]] | None:
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    if not lines or lines[0] != f"c={p.c} e={p.e} screen={p.screen}":
        raise ValueError(f"checkpoint {path} belongs to a different search: {lines[:1]}")
    next_L = int(lines[1].split("=", 1)[1]) + 1
    counters = Counters(*(int(x) for x in lines[2].split("=", 1)[1].split(",")))
    hits = []
    for ln in lines[3:]:
        body = ln.split("=", 1)[1]
        blocks, prov = body.split(";")
        hits.append(Hit(tuple(int(x) for x in blocks[1:-1].split(",")), tuple(int(x) for x in prov.split(","))))
    return next_L, counters, hits


# ---------------------------------------------------------------------------
# driver


def run_search(p: SearchParams, checkpoint: str | None = None) -> SearchReport:
    """Search one ``(c, e)``; results do not depend on worker count."""
    start = time.perf_counter()
    if p.c + p.e == 0:
        hit = Hit((1,), (0, 0))
        return SearchReport(p, [hit], Counters(1, 1, 1, 1), time.perf_counter() - start)
    C_sets = enumerate_C(p.c, p.e)
    nL = count_L(p.c, p.e)
    counters = Counters()
    hits: list[Hit] = []
    if not C_sets:
        counters.raw = 0
        return SearchReport(p, [], counters, time.perf_counter() - start)

    next_L = 0
    if checkpoint and p.huge:
        restored = read_checkpoint(checkpoint, p)
        if restored is not None:
            next_L, counters, hits = restored
            log.info("resuming (%d,%d) at L index %d", p.c, p.e, next_L)

    chunk = nL if not p.huge else max(1, CHECKPOINT_EVERY // len(C_sets))
    pool = ProcessPoolExecutor(max_workers=p.workers) if p.workers > 1 else None
    try:
        while next_L < nL:
            stop = min(nL, next_L + chunk)
            L_rows = _L_array(p.c, p.e, next_L, stop)
            for part in _run_chunk(p, L_rows, next_L, C_sets, pool):
                counters += part.counters
                hits.extend(part.hits)
            next_L = stop
            if checkpoint and p.huge:
                write_checkpoint(checkpoint, p, next_L, counters, hits)
    finally:
        if pool is not None:
            pool.shutdown()
    hits.sort()
    return SearchReport(p, hits, counters, time.perf_counter() - start)


def search_all(max_len: int, workers: int = 1, screen: str = "exact", huge: bool = False) -> list[SearchReport]:
    if max_len > MAX_ADMISSIBLE_LEN:
        raise ValueError(f"no admissible word is longer than {MAX_ADMISSIBLE_LEN}")
    return [
        run_search(SearchParams(pr.c, pr.e, workers=workers, screen=screen, huge=huge))
        for pr in admissible_params(max_len)
    ]


# ---------------------------------------------------------------------------
# report files


def format_report(r: SearchReport, timing: bool = True) -> str:
    p, k = r.params, r.counters
    lines = [
        f"# c={p.c} e={p.e} ell={p.ell} screen={p.screen} raw={k.raw} canonical={k.canonical} "
        f"screened={k.screened} exact_checked={k.exact_checked} hits={len(r.hits)}"
    ]
    for h in r.hits:
        lines.append(f"{p.c},{p.e},{format_blocks(h.lengths)},{h.text},{h.poly().to_list_str()}")
    if timing:
        lines.append(f"# wall_time={r.wall_time:.3f}s")
    return "\n".join(lines) + "\n"


def parse_report_line(line: str) -> tuple[int, int, tuple[int, ...], str, IntPoly]:
    """Inverse of one hit line of :func:`format_report`."""
    c_s, e_s, rest = line.strip().split(",", 2)
    close = rest.index("]")
    blocks = tuple(int(x) for x in rest[1:close].split(","))
    rest = rest[close + 2:]
    word, coeffs = rest.split(",", 1)
    return int(c_s), int(e_s), blocks, word, IntPoly.from_list_str(coeffs)


# ---------------------------------------------------------------------------
# reference table


@dataclass(frozen=True)
class RowCheck:
    n: int
    passed: bool
    detail: str


def verify_table1() -> list[RowCheck]:
    """Trace polynomial and block statistics of each of the 31 listed words."""
    from .tables import table1_rows
    from .words import parse_word, to_blocks

    out = []
    for row in table1_rows():
        w = parse_word(row.text)
        problems = []
        if trace_poly(w) != target_poly(row.c, row.e):
            problems.append("trace polynomial differs from target")
        if len(w) != row.ell:
            problems.append(f"length {len(w)} != {row.ell}")
        blocks = to_blocks(w).lengths
        long_blocks = sum(1 for b in blocks if b > 1)
        if row.c + row.e == 0:
            if len(w) != 1:
                problems.append("c=e=0 requires a single syllable")
        else:
            if len(blocks) != 2 * row.e + 2:
                problems.append(f"{len(blocks)} blocks, expected {2 * row.e + 2}")
            if long_blocks != row.c + row.e:
                problems.append(f"{long_blocks} blocks longer than 1, expected {row.c + row.e}")
        detail = "; ".join(problems) or f"c={row.c} e={row.e} ell={row.ell} blocks={len(blocks)} long={long_blocks}"
        out.append(RowCheck(row.n, not problems, detail))
    return out
