"""Component codes.

* ``compsub`` corrects one substitution of a symbol by its complement
  (symbol sum mod 2q, weighted sum mod qn).
* ``qvt`` is the q-ary Varshamov-Tenengolts code with its symbol sum taken
  mod 2q; it corrects one insertion.
* ``svt`` is the shifted VT code, correcting one deletion (or insertion)
  whose location is known to within ``P`` consecutive positions.
* ``burst`` interleaves an RLL-constrained ``qvt`` row with an ``svt`` row
  over irreducible words and corrects one insertion of two adjacent symbols.

Positions in every contract below are 1-based.  Apart from ``compsub``,
the decoders are search decoders: try every admissible edit, keep the
results that are codewords, and demand exactly one survivor.  Uniqueness of
that survivor is precisely the correcting property of the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alphabet import Alphabet, Word, as_alphabet
from .errors import DecodeError, DomainError
from .signature import is_irreducible_tuple


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    # inclusive lo, exclusive hi
    if not isinstance(value, int) or not lo <= value < hi:
        raise DomainError(f"{name}={value!r} outside [{lo}, {hi})")


def _check_len(x: Word, n: int) -> None:
    if len(x) != n:
        raise DomainError(f"expected a word of length {n}, got {len(x)}")


def rll_threshold(q: int, n: int) -> int:
    """Integer run-length cap ``ceil(3 log_q n) + 2``, computed without floats."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k, cube, power = 0, n**3, 1
    while power < cube:
        power *= q
        k += 1
    return k + 2


# ------------------------------------------------------------------ profiles


@dataclass(frozen=True, slots=True)
class AscentProfile:
    bits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.bits)


def ascent_bits(t: Sequence[int]) -> tuple[int, ...]:
    if not t:
        return ()
    return (1,) + tuple(1 if b >= a else 0 for a, b in zip(t, t[1:]))


def ascent_profile(x: Word) -> AscentProfile:
    return AscentProfile(ascent_bits(x.symbols))


def vt_syndrome(t: Sequence[int]) -> int:
    """Sum of ``(i - 1) * beta_i``."""
    return sum(i * b for i, b in enumerate(ascent_bits(t)))


def svt_syndrome(t: Sequence[int]) -> int:
    """Sum of ``i * beta_i``."""
    return sum((i + 1) * b for i, b in enumerate(ascent_bits(t)))


def weighted_sum(t: Sequence[int]) -> int:
    return sum((i + 1) * v for i, v in enumerate(t))


def max_run_length(x: Word | Sequence[int]) -> int:
    t = x.symbols if isinstance(x, Word) else tuple(x)
    best = run = 0
    prev = None
    for s in t:
        run = run + 1 if s == prev else 1
        prev = s
        best = max(best, run)
    return best


# ---------------------------------------------------------------- parameters


@dataclass(frozen=True)
class CompSubParams:
    q: int
    n: int
    a: int
    b: int
    family = "compsub"

    def __post_init__(self):
        as_alphabet(self.q)
        _check_range("n", self.n, 1, 1 << 62)
        _check_range("a", self.a, 0, 2 * self.q)
        _check_range("b", self.b, 0, self.q * self.n)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    def accepts(self, t: Sequence[int]) -> bool:
        q, n = self.q, self.n
        return sum(t) % (2 * q) == self.a and weighted_sum(t) % (q * n) == self.b

    def syndromes(self, t: Sequence[int]) -> tuple[int, int]:
        q, n = self.q, self.n
        return (sum(t) - self.a) % (2 * q), (weighted_sum(t) - self.b) % (q * n)


@dataclass(frozen=True)
class QvtParams:
    q: int
    n: int
    c: int
    d: int
    family = "qvt"

    def __post_init__(self):
        as_alphabet(self.q)
        _check_range("n", self.n, 1, 1 << 62)
        _check_range("c", self.c, 0, 2 * self.q)
        _check_range("d", self.d, 0, self.n)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    def accepts(self, t: Sequence[int]) -> bool:
        return sum(t) % (2 * self.q) == self.c and vt_syndrome(t) % self.n == self.d


@dataclass(frozen=True)
class SvtParams:
    q: int
    n: int
    P: int
    e: int
    f: int
    g: int
    family = "svt"

    def __post_init__(self):
        as_alphabet(self.q)
        _check_range("n", self.n, 1, 1 << 62)
        _check_range("P", self.P, 1, 1 << 62)
        _check_range("e", self.e, 0, self.P + 1)
        _check_range("f", self.f, 0, self.q)
        _check_range("g", self.g, 0, 2)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    def accepts(self, t: Sequence[int]) -> bool:
        bits = ascent_bits(t)
        return (
            sum((i + 1) * b for i, b in enumerate(bits)) % (self.P + 1) == self.e
            and sum(t) % self.q == self.f
            and sum(bits) % 2 == self.g
        )


@dataclass(frozen=True)
class BurstParams:
    q: int
    n: int
    h: int
    w: int
    e: int
    f: int
    g: int
    family = "burst"

    def __post_init__(self):
        as_alphabet(self.q)
        if not isinstance(self.n, int) or self.n < 4 or self.n % 2:
            raise DomainError(f"burst code length must be even and >= 4, got {self.n}")
        _check_range("h", self.h, 0, 2 * self.q)
        _check_range("w", self.w, 0, self.n // 2)
        _check_range("e", self.e, 0, self.P + 1)
        _check_range("f", self.f, 0, self.q)
        _check_range("g", self.g, 0, 2)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    @property
    def T(self) -> int:
        return rll_threshold(self.q, self.n)

    @property
    def P(self) -> int:
        return self.T + 1

    def row1(self) -> QvtParams:
        return QvtParams(self.q, self.n // 2, self.h, self.w)

    def row2(self) -> SvtParams:
        return SvtParams(self.q, self.n // 2, self.P, self.e, self.f, self.g)

    def accepts(self, t: Sequence[int]) -> bool:
        if not is_irreducible_tuple(t, self.q):
            return False
        top, bottom = t[0::2], t[1::2]
        return (
            max_run_length(top) <= self.T
            and self.row1().accepts(top)
            and self.row2().accepts(bottom)
        )


# --------------------------------------------------------------- membership


def compsub_member(x: Word, p: CompSubParams) -> bool:
    _check_len(x, p.n)
    return p.accepts(x.symbols)


def qvt_member(x: Word, p: QvtParams) -> bool:
    _check_len(x, p.n)
    return p.accepts(x.symbols)


def svt_member(x: Word, p: SvtParams) -> bool:
    _check_len(x, p.n)
    return p.accepts(x.symbols)


def burst_member(x: Word, p: BurstParams) -> bool:
    _check_len(x, p.n)
    return p.accepts(x.symbols)


# ------------------------------------------------------------- interleaving


def interleave_rows(row1: Word, row2: Word) -> Word:
    if len(row1) != len(row2):
        raise DomainError(f"row lengths differ: {len(row1)} vs {len(row2)}")
    if row1.alphabet != row2.alphabet:
        raise DomainError("rows over different alphabets")
    out = [0] * (2 * len(row1))
    out[0::2] = row1.symbols
    out[1::2] = row2.symbols
    return Word(tuple(out), row1.alphabet)


def deinterleave(x: Word) -> tuple[Word, Word]:
    if len(x) % 2:
        raise DomainError(f"cannot split odd length {len(x)} into two rows")
    return Word(x.symbols[0::2], x.alphabet), Word(x.symbols[1::2], x.alphabet)


# ----------------------------------------------------------------- decoders


def _unique(candidates: set[tuple], what: str) -> tuple:
    if len(candidates) != 1:
        raise DecodeError(f"{what}: {len(candidates)} candidate codewords, expected exactly 1")
    return next(iter(candidates))


def compsub_decode(y: Word, p: CompSubParams) -> Word:
    """Undo at most one substitution of a symbol by its complement.

    A substitution ``w -> q-1-w`` at position ``i`` moves the symbol sum by
    the odd amount ``delta = q-1-2w`` and the weighted sum by ``i * delta``.
    ``delta`` is the odd representative of the first syndrome in
    ``(-q, q)``; since ``|(i - i') * delta| < qn`` the position scan finds at
    most one ``i``.
    """
    _check_len(y, p.n)
    q, n = p.q, p.n
    d1, d2 = p.syndromes(y.symbols)
    if d1 == 0 and d2 == 0:
        return y
    if d1 % 2 == 0:
        raise DecodeError("not a single-complementary-substitution corruption")
    delta = d1 if d1 < q else d1 - 2 * q
    # the corrupted symbol s replaced w = q-1-s, so s - w = delta
    want = (q - 1 + delta) // 2
    for i in range(1, n + 1):
        if (i * delta - d2) % (q * n) == 0 and y[i - 1] == want:
            t = list(y.symbols)
            t[i - 1] = q - 1 - t[i - 1]
            if p.accepts(t):
                return Word(tuple(t), y.alphabet)
    raise DecodeError("not a single-complementary-substitution corruption")


def qvt_decode_insertion(y: Word, p: QvtParams) -> Word:
    _check_len(y, p.n + 1)
    t = y.symbols
    cands = {c for j in range(len(t)) if p.accepts(c := t[:j] + t[j + 1 :])}
    return Word(_unique(cands, "qvt insertion"), y.alphabet)


def _window(start: int, size: int, lo: int, hi: int) -> range:
    # 1-based inclusive window clipped to [lo, hi]
    if start < 1:
        raise DomainError(f"window_start must be >= 1, got {start}")
    return range(max(start, lo), min(start + size - 1, hi) + 1)


def svt_decode_deletion(y: Word, p: SvtParams, window_start: int) -> Word:
    """Reinsert one symbol; the deleted position lies in
    ``[window_start, window_start + P - 1]``."""
    _check_len(y, p.n - 1)
    t = y.symbols
    cands = set()
    for j in _window(window_start, p.P, 1, p.n):
        head, tail = t[: j - 1], t[j - 1 :]
        for s in range(p.q):
            c = head + (s,) + tail
            if p.accepts(c):
                cands.add(c)
    return Word(_unique(cands, "svt deletion"), y.alphabet)


def svt_decode_insertion(y: Word, p: SvtParams, window_start: int) -> Word:
    """Remove one symbol; the inserted position lies in
    ``[window_start, window_start + P - 1]``."""
    _check_len(y, p.n + 1)
    t = y.symbols
    cands = set()
    for j in _window(window_start, p.P, 1, p.n + 1):
        c = t[: j - 1] + t[j:]
        if p.accepts(c):
            cands.add(c)
    return Word(_unique(cands, "svt insertion"), y.alphabet)


def burst_decode_insertion(y: Word, p: BurstParams) -> Word:
    _check_len(y, p.n + 2)
    t = y.symbols
    cands = {c for j in range(p.n + 1) if p.accepts(c := t[:j] + t[j + 2 :])}
    return Word(_unique(cands, "burst insertion"), y.alphabet)


MEMBER = {
    "compsub": compsub_member,
    "qvt": qvt_member,
    "svt": svt_member,
    "burst": burst_member,
}
PARAMS = {
    "compsub": CompSubParams,
    "qvt": QvtParams,
    "svt": SvtParams,
    "burst": BurstParams,
}
