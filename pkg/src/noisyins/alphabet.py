"""Alphabet arithmetic, the complement involution and the Word value type.

Symbols are the integers ``0 .. q-1`` for an even ``q >= 4``; the complement
of ``u`` is ``q - 1 - u``.  The DNA lettering A, C, G, T corresponds to
0, 1, 2, 3 (so A<->T and C<->G are complements), but only digits are parsed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError

DNA_LETTERS = "ACGT"


@dataclass(frozen=True, slots=True)
class Alphabet:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise DomainError(f"alphabet size must be an integer, got {self.q!r}")
        if self.q < 4 or self.q % 2:
            raise DomainError(f"alphabet size must be even and >= 4, got {self.q}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.q))

    def __len__(self) -> int:
        return self.q

    def complement(self, s: int) -> int:
        return complement_symbol(self, s)


def as_alphabet(q: Alphabet | int) -> Alphabet:
    return q if isinstance(q, Alphabet) else Alphabet(q)


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable word over an alphabet.

    Two words are equal only if they share both the symbols and the alphabet.
    Ordering is lexicographic by symbol value and is only defined within one
    alphabet.
    """

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        q = self.alphabet.q
        for i, s in enumerate(self.symbols):
            if not 0 <= s < q:
                raise DomainError(f"symbol {s} at index {i} is outside Z_{q}")

    @classmethod
    def of(cls, symbols: Iterable[int], q: Alphabet | int) -> Word:
        return cls(tuple(int(s) for s in symbols), as_alphabet(q))

    @classmethod
    def parse(cls, text: str, q: Alphabet | int) -> Word:
        return parse_word(text, q)

    @property
    def q(self) -> int:
        return self.alphabet.q

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.symbols[item], self.alphabet)
        return self.symbols[item]

    def __add__(self, other: Word) -> Word:
        _check_same_alphabet(self, other)
        return Word(self.symbols + other.symbols, self.alphabet)

    def __lt__(self, other: Word) -> bool:
        _check_same_alphabet(self, other)
        return self.symbols < other.symbols

    def __le__(self, other: Word) -> bool:
        _check_same_alphabet(self, other)
        return self.symbols <= other.symbols

    def __gt__(self, other: Word) -> bool:
        _check_same_alphabet(self, other)
        return self.symbols > other.symbols

    def __ge__(self, other: Word) -> bool:
        _check_same_alphabet(self, other)
        return self.symbols >= other.symbols

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, q={self.q})"


def _check_same_alphabet(x: Word, y: Word) -> None:
    if x.alphabet != y.alphabet:
        raise DomainError(f"words over different alphabets (q={x.q} vs q={y.q})")


def complement_symbol(alphabet: Alphabet | int, s: int) -> int:
    q = as_alphabet(alphabet).q
    if not 0 <= s < q:
        raise DomainError(f"symbol {s} is outside Z_{q}")
    return q - 1 - s


def complement_word(x: Word) -> Word:
    top = x.q - 1
    return Word(tuple(top - s for s in x.symbols), x.alphabet)


def parse_word(text: str, q: Alphabet | int) -> Word:
    """Parse the textual word format.

    Digit strings (``"100231020"``) are accepted for ``q <= 10``; larger
    alphabets use comma-separated decimals (``"11,0,3"``).
    """
    alphabet = as_alphabet(q)
    text = text.strip()
    if not text:
        return Word((), alphabet)
    try:
        if "," in text or alphabet.q > 10:
            symbols = tuple(int(tok) for tok in text.split(","))
        else:
            symbols = tuple(int(ch) for ch in text)
    except ValueError:
        raise DomainError(f"cannot parse word {text!r}") from None
    return Word(symbols, alphabet)


def format_word(x: Word | Sequence[int], q: int | None = None) -> str:
    if isinstance(x, Word):
        symbols, q = x.symbols, x.q
    else:
        symbols = x
    if q is not None and q > 10:
        return ",".join(str(s) for s in symbols)
    return "".join(str(s) for s in symbols)
