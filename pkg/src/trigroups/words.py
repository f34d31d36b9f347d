"""Words in the free product Z2 * Z3 = <x, y | x^2 = y^3 = 1>.

A cyclically reduced word of even length 2l is stored as its syllable
exponents: ``Word((a1, ..., al))`` stands for ``x y^a1 x y^a2 ... x y^al``
with every ``aj`` in ``{1, 2}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby


class WordSyntaxError(ValueError):
    """Malformed word text; ``pos`` is the 0-based offending offset."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class WordReductionError(ValueError):
    """Word text is well formed but does not reduce to a usable word."""


@dataclass(frozen=True, order=True)
class Word:
    alphas: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.alphas)
        if not a:
            raise ValueError("a word needs at least one syllable")
        if any(x not in (1, 2) for x in a):
            raise ValueError(f"syllable exponents must be 1 or 2, got {a}")
        object.__setattr__(self, "alphas", a)

    def __len__(self) -> int:
        return len(self.alphas)

    @property
    def ell(self) -> int:
        return len(self.alphas)

    def __str__(self) -> str:
        return print_word(self)

    def rotate(self, k: int) -> Word:
        k %= len(self.alphas)
        return Word(self.alphas[k:] + self.alphas[:k])

    def letters(self) -> str:
        """Letter string over ``x``, ``y``, ``Y`` (``Y`` = ``y^2``)."""
        return "".join("xy" if a == 1 else "xY" for a in self.alphas)


class BlockType(Enum):
    XY = 1
    XY2 = 2


@dataclass(frozen=True)
class BlockList:
    """Run lengths of the maximal ``(xy)^b`` / ``(xy^2)^b`` blocks.

    ``offset`` records how far the source word was rotated so that it
    starts on a block boundary; it is what makes ``from_blocks`` an exact
    inverse of ``to_blocks``. Canonical forms drop it along with the type.
    """

    lengths: tuple[int, ...]
    first: BlockType = BlockType.XY
    offset: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(b) for b in self.lengths))
        if not self.lengths or any(b < 1 for b in self.lengths):
            raise ValueError(f"block lengths must be positive, got {self.lengths}")

    def __len__(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return format_blocks(self.lengths)


@dataclass(frozen=True)
class Interval:
    """Cyclic syllable interval ``[start..end]``, inclusive, 0-based."""

    start: int
    end: int

    def length(self, ell: int) -> int:
        return (self.end - self.start) % ell + 1

    def indices(self, ell: int) -> list[int]:
        s = self.start % ell
        return [(s + i) % ell for i in range(self.length(ell))]

    def __str__(self) -> str:
        return f"[{self.start:X}..{self.end:X}]"


def parse_interval(text: str) -> Interval:
    """Parse ``I..J`` (brackets optional); digits are hexadecimal."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = body.split("..")
    if len(parts) != 2:
        raise ValueError(f"expected 'I..J', got {text!r}")
    try:
        return Interval(int(parts[0].strip(), 16), int(parts[1].strip(), 16))
    except ValueError:
        raise ValueError(f"bad interval endpoints in {text!r}") from None


# ---------------------------------------------------------------------------
# parsing

_ORDER = {"x": 2, "y": 3}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> list[tuple[str, int]]:
        out: list[tuple[str, int]] = []
        while self._peek() and self._peek() in "xy(":
            out.extend(self.term())
        if not out:
            raise WordSyntaxError("expected 'x', 'y' or '('", self.pos)
        return out

    def term(self) -> list[tuple[str, int]]:
        atom = self.atom()
        if self._peek() == "^":
            self.pos += 1
            self._skip()
            begin = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if begin == self.pos:
                raise WordSyntaxError("expected exponent", begin)
            n = int(self.text[begin:self.pos])
            if n < 1:
                raise WordSyntaxError("exponent must be at least 1", begin)
            return atom * n
        return atom

    def atom(self) -> list[tuple[str, int]]:
        ch = self._peek()
        if ch in ("x", "y"):
            self.pos += 1
            return [(ch, 1)]
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self._peek() != ")":
                raise WordSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return inner
        raise WordSyntaxError("expected 'x', 'y' or '('", self.pos)

    def parse(self) -> list[tuple[str, int]]:
        letters = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise WordSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return letters


def _free_reduce(letters) -> list[tuple[str, int]]:
    stack: list[tuple[str, int]] = []
    for g, e in letters:
        e %= _ORDER[g]
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e = (stack.pop()[1] + e) % _ORDER[g]
            if e == 0:
                continue
        stack.append((g, e))
    return stack


def _cyclic_reduce(syl: list[tuple[str, int]]) -> list[tuple[str, int]]:
    syl = list(syl)
    while len(syl) > 1 and syl[0][0] == syl[-1][0]:
        g = syl[0][0]
        e = (syl[0][1] + syl.pop()[1]) % _ORDER[g]
        if e == 0:
            syl.pop(0)
        else:
            syl[0] = (g, e)
    return syl


def _alphas_of(syl: list[tuple[str, int]]) -> tuple[int, ...]:
    return tuple(e for g, e in syl if g == "y")


def parse_fragment(text: str) -> tuple[int, ...]:
    """Parse a linear subword ``x y^a ... x y^b`` into its exponents.

    Used for bracketed factors; no cyclic reduction is applied, and the
    reduced fragment must start with ``x`` and end with a power of ``y``.
    """
    syl = _free_reduce(_Parser(text).parse())
    if not syl or syl[0][0] != "x" or syl[-1][0] != "y":
        raise WordReductionError(f"{text!r} is not a syllable-aligned fragment x y^a ... x y^b")
    return _alphas_of(syl)


def parse_word(text: str) -> Word:
    """Parse compact notation such as ``(xy)^2xy^2xyxy^2``.

    The word is freely and cyclically reduced using ``x^2 = y^3 = 1`` and
    rotated to begin with ``x``.
    """
    syl = _cyclic_reduce(_free_reduce(_Parser(text).parse()))
    if not syl:
        raise WordReductionError(f"{text!r} reduces to the empty word")
    if len(syl) < 2:
        raise WordReductionError(f"{text!r} reduces to a single syllable, not an alternating x/y word")
    if syl[0][0] != "x":
        syl = syl[1:] + syl[:1]
    return Word(_alphas_of(syl))


def print_word(w: Word | tuple[int, ...]) -> str:
    alphas = w.alphas if isinstance(w, Word) else tuple(w)
    out = []
    for a, run in groupby(alphas):
        k = len(list(run))
        unit = "xy" if a == 1 else "xy^2"
        out.append(unit if k == 1 else f"({unit})^{k}")
    return "".join(out)


# ---------------------------------------------------------------------------
# blocks


def to_blocks(w: Word) -> BlockList:
    a = w.alphas
    n = len(a)
    first_change = next((i for i in range(n) if a[i] != a[i - 1]), None)
    if first_change is None:
        return BlockList((n,), BlockType(a[0]), 0)
    rot = a[first_change:] + a[:first_change]
    lengths = tuple(len(list(run)) for _, run in groupby(rot))
    return BlockList(lengths, BlockType(rot[0]), first_change)


def from_blocks(b: BlockList) -> Word:
    t = len(b.lengths)
    if t > 1 and t % 2:
        raise ValueError(f"an odd number of blocks ({t}) cannot alternate cyclically")
    kind = b.first.value
    alphas: list[int] = []
    for length in b.lengths:
        alphas.extend([kind] * length)
        kind = 3 - kind
    w = Word(tuple(alphas))
    return w.rotate(-b.offset) if b.offset else w


def word_from_lengths(lengths) -> Word:
    return from_blocks(BlockList(tuple(lengths)))


def invert(w: Word) -> Word:
    """Inverse word, written cyclically as ``x y^(3-al) ... x y^(3-a1)``."""
    return Word(tuple(3 - a for a in reversed(w.alphas)))


def complement(w: Word) -> Word:
    """Image under the automorphism ``y -> y^2``."""
    return Word(tuple(3 - a for a in w.alphas))


def dihedral_orbit(lengths) -> list[tuple[int, ...]]:
    seq = tuple(lengths)
    t = len(seq)
    rev = seq[::-1]
    return [seq[i:] + seq[:i] for i in range(t)] + [rev[i:] + rev[:i] for i in range(t)]


def canonical_lengths(lengths) -> tuple[int, ...]:
    return min(dihedral_orbit(lengths))


def is_canonical(lengths) -> bool:
    seq = tuple(lengths)
    return all(seq <= other for other in dihedral_orbit(seq))


def canonicalize(b: BlockList) -> BlockList:
    return BlockList(canonical_lengths(b.lengths))


def format_blocks(lengths) -> str:
    return "[" + ",".join(str(x) for x in lengths) + "]"


def parse_blocks(text: str) -> BlockList:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"expected '[b1,b2,...]', got {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        raise ValueError("empty block list")
    try:
        lengths = tuple(int(x) for x in inner.split(","))
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    return BlockList(lengths)


# ---------------------------------------------------------------------------
# exponent sums


def exponent_sums(w: Word) -> tuple[int, int]:
    return len(w.alphas), sum(w.alphas)


def has_essential_cyclic_rep(w: Word) -> bool:
    xs, ys = exponent_sums(w)
    return xs % 2 == 1 and ys % 3 == 0


def subword(w: Word, iv: Interval) -> tuple[int, ...]:
    return tuple(w.alphas[i] for i in iv.indices(len(w)))
