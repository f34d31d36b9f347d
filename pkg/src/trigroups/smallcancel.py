"""Pieces of a cyclically reduced word in Z2 * Z3 and non-piece factorisations.

A subword ``U`` is a piece of ``W`` when two *different* words ``U V1`` and
``U V2`` are cyclic conjugates of ``W`` or ``W^-1``.  All subwords here are
syllable aligned (``x y^a ... x y^b``), so a cyclic conjugate starting with
``U`` is a rotation of the exponent tuple of ``W`` or of its inverse, and
the completions differ exactly when the rotations do.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import Interval, Word, invert, parse_fragment, print_word


class PieceIndex:
    """Every syllable-aligned cyclic subword of ``W^{+-1}`` with its completions."""

    def __init__(self, w: Word):
        self.word = w
        n = len(w)
        conj = set()
        for base in (w.alphas, invert(w).alphas):
            for i in range(n):
                conj.add(base[i:] + base[:i])
        self.conjugates: tuple[tuple[int, ...], ...] = tuple(sorted(conj))
        self.occurrences: dict[tuple[int, ...], set[int]] = {}
        for cid, r in enumerate(self.conjugates):
            for k in range(1, n + 1):
                self.occurrences.setdefault(r[:k], set()).add(cid)

    def completions(self, fragment) -> set[tuple[int, ...]]:
        frag = tuple(fragment)
        return {self.conjugates[i][len(frag):] for i in self.occurrences.get(frag, ())}

    def is_piece(self, fragment) -> bool:
        return len(self.occurrences.get(tuple(fragment), ())) >= 2

    def pieces(self) -> set[tuple[int, ...]]:
        return {u for u, ids in self.occurrences.items() if len(ids) >= 2}


def build_piece_index(w: Word) -> PieceIndex:
    return PieceIndex(w)


def interval_alphas(w: Word, iv: Interval) -> tuple[int, ...]:
    n = len(w)
    if iv.length(n) > n:
        raise ValueError("interval longer than the word")
    return tuple(w.alphas[i] for i in iv.indices(n))


def is_piece(w: Word, iv: Interval, index: PieceIndex | None = None) -> bool:
    index = index or PieceIndex(w)
    return index.is_piece(interval_alphas(w, iv))


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class Decomposition:
    factors: tuple[tuple[int, ...], ...]
    start: int | None = None  # rotation of W where the first factor begins

    def __str__(self):
        return "·".join(f"[{print_word(f)}]" for f in self.factors)

    def intervals(self) -> list[Interval]:
        if self.start is None:
            raise ValueError("decomposition was not located in a word")
        out, pos = [], self.start
        total = sum(len(f) for f in self.factors)
        for f in self.factors:
            out.append(Interval(pos % total, (pos + len(f) - 1) % total))
            pos += len(f)
        return out


@dataclass
class Verdict:
    passed: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def parse_decomposition(text: str) -> Decomposition:
    """Parse ``[..]·[..]·[..]``; ``·``, ``*`` or ``.`` may separate factors."""
    body = text.replace("·", " ").replace("*", " ").strip()
    factors = []
    depth = 0
    buf = ""
    for ch in body:
        if ch == "[":
            if depth:
                raise ValueError("nested '[' in decomposition")
            depth, buf = 1, ""
        elif ch == "]":
            if not depth:
                raise ValueError("unbalanced ']' in decomposition")
            depth = 0
            factors.append(parse_fragment(buf))
        elif depth:
            buf += ch
        elif not (ch.isspace() or ch == "."):
            raise ValueError(f"unexpected {ch!r} outside brackets")
    if depth:
        raise ValueError("unterminated '[' in decomposition")
    if not factors:
        raise ValueError("no factors found")
    return Decomposition(tuple(factors))


def locate(w: Word, factors) -> int | None:
    """Rotation of ``w`` equal to the concatenated factors, if any."""
    whole = tuple(a for f in factors for a in f)
    n = len(w)
    if len(whole) != n:
        return None
    for i in range(n):
        if w.alphas[i:] + w.alphas[:i] == whole:
            return i
    return None


def verify_decomposition(
    w: Word,
    d: Decomposition,
    count: int = 3,
    min_len: int = 8,
    even: bool = True,
    index: PieceIndex | None = None,
) -> Verdict:
    """Check that ``d`` splits a cyclic conjugate of ``w`` into non-pieces.

    Lengths are free-product lengths (two per syllable).
    """
    if not d.factors or any(not f for f in d.factors):
        raise ValueError("malformed decomposition: empty factor")
    reasons = []
    if locate(w, d.factors) is None:
        reasons.append("factors do not concatenate to a cyclic conjugate of the word")
    index = index or PieceIndex(w)
    for i, f in enumerate(d.factors, 1):
        if index.is_piece(f):
            reasons.append(f"factor {i} [{print_word(f)}] is a piece")
        length = 2 * len(f)
        if length < min_len:
            reasons.append(f"factor {i} has length {length} < {min_len}")
        if even and length % 2:
            reasons.append(f"factor {i} has odd length {length}")
    if len(d.factors) != count:
        reasons.append(f"{len(d.factors)} factors, expected {count}")
    return Verdict(not reasons, reasons)


def _compositions(total: int, parts: int, least: int):
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total - least * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, least):
            yield (first,) + rest


def find_decomposition(
    w: Word, count: int = 3, min_len: int = 8, even: bool = True
) -> Decomposition | None:
    """First non-piece factorisation in scan order (start rotation, then cut sizes).

    Factors are syllable aligned, so every factor has even length and the
    ``even`` flag never excludes anything.
    """
    if count < 1:
        raise ValueError("need at least one factor")
    n = len(w)
    least = max(1, -(-min_len // 2))
    if least * count > n:
        return None
    index = PieceIndex(w)
    doubled = w.alphas + w.alphas
    for start in range(n):
        for sizes in _compositions(n, count, least):
            pos = start
            factors = []
            for s in sizes:
                frag = doubled[pos:pos + s]
                if index.is_piece(frag):
                    break
                factors.append(frag)
                pos += s
            else:
                return Decomposition(tuple(factors), start)
    return None


def verify_table2() -> list[tuple[int, bool, str]]:
    from .tables import TABLE2, table1_row
    from .words import parse_word

    out = []
    for n, texts in TABLE2.items():
        w = parse_word(table1_row(n).text)
        d = Decomposition(tuple(parse_fragment(t) for t in texts))
        v = verify_decomposition(w, d)
        out.append((n, v.passed, "; ".join(v.reasons) or str(d)))
    return out
