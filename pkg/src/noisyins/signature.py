"""Signatures, irreducibility, and the irreducible words Irr(n)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .alphabet import Alphabet, Word, as_alphabet
from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Signature:
    """First symbols of the maximal ``{a, ~a}`` blocks of a word, with block sizes."""

    word: Word
    block_lengths: tuple[int, ...]

    def __str__(self) -> str:
        return str(self.word)


def signature_tuple(symbols: Sequence[int], q: int) -> tuple[int, ...]:
    """Signature of a raw symbol sequence (hot path for cone enumeration)."""
    if not symbols:
        return ()
    out = [symbols[0]]
    top = q - 1
    prev = symbols[0]
    for s in symbols[1:]:
        if s != prev and s != top - prev:
            out.append(s)
        prev = s
    return tuple(out)


def compute_signature(x: Word) -> Signature:
    if not len(x):
        return Signature(x, ())
    top = x.q - 1
    heads = [x[0]]
    lengths = [1]
    for s in x.symbols[1:]:
        head = heads[-1]
        if s == head or s == top - head:
            lengths[-1] += 1
        else:
            heads.append(s)
            lengths.append(1)
    return Signature(Word(tuple(heads), x.alphabet), tuple(lengths))


def is_irreducible_tuple(symbols: Sequence[int], q: int) -> bool:
    top = q - 1
    return all(b != a and b != top - a for a, b in zip(symbols, symbols[1:]))


def is_irreducible(x: Word) -> bool:
    return is_irreducible_tuple(x.symbols, x.q)


def enumerate_irr(alphabet: Alphabet | int, n: int) -> Iterator[Word]:
    """Yield every irreducible word of length ``n`` in lexicographic order."""
    alphabet = as_alphabet(alphabet)
    q = alphabet.q
    if n <= 0:
        return
    succ = [[t for t in range(q) if t != s and t != q - 1 - s] for s in range(q)]

    def grow(prefix: list[int]):
        if len(prefix) == n:
            yield Word(tuple(prefix), alphabet)
            return
        for t in succ[prefix[-1]]:
            prefix.append(t)
            yield from grow(prefix)
            prefix.pop()

    for s in range(q):
        yield from grow([s])


def count_irr(alphabet: Alphabet | int, n: int) -> int:
    """``q * (q - 2) ** (n - 1)``, in exact integer arithmetic."""
    q = as_alphabet(alphabet).q
    if n < 1:
        raise DomainError(f"count_irr needs n >= 1, got {n}")
    return q * (q - 2) ** (n - 1)
