"""The combined code C_F and its decoder for the noisy insertion channel.

A codeword is an irreducible word of even length ``n`` that lies in the
burst code and additionally satisfies three congruences on the full word::

    sum x_i            == a  (mod 2q)
    sum i * x_i        == b  (mod qn)
    sum (i-1) * beta_i == d  (mod n)

Decoding works on the signature of the received word.  Complement
insertions and duplications leave the signature alone, and the single
random insertion changes it, relative to the codeword, by at most one of:
a complementary substitution (same length), a point insertion (+1), or an
inserted pair whose second symbol equals, or complements, the symbol just
before the pair (+2).  Each case is handled by the matching component code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .alphabet import Alphabet, Word, as_alphabet
from .channel import DEFAULT_LIMIT, noisy_cone_tuples
from .codes import (
    BurstParams,
    CompSubParams,
    QvtParams,
    _check_len,
    _check_range,
    burst_decode_insertion,
    compsub_decode,
    qvt_decode_insertion,
    rll_threshold,
)
from .errors import DecodeError, DomainError, EnumerationLimitError
from .signature import signature_tuple


@dataclass(frozen=True)
class FinalParams:
    q: int
    n: int
    a: int
    b: int
    d: int
    h: int
    w: int
    e: int
    f: int
    g: int
    family = "final"

    def __post_init__(self):
        as_alphabet(self.q)
        if not isinstance(self.n, int) or self.n < 4 or self.n % 2:
            raise DomainError(f"code length must be even and >= 4, got {self.n}")
        _check_range("a", self.a, 0, 2 * self.q)
        _check_range("b", self.b, 0, self.q * self.n)
        _check_range("d", self.d, 0, self.n)
        # the remaining ranges are checked by BurstParams
        self.burst()

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.q)

    @property
    def T(self) -> int:
        return rll_threshold(self.q, self.n)

    @property
    def P(self) -> int:
        return self.T + 1

    def key(self) -> tuple[int, ...]:
        return (self.a, self.b, self.d, self.h, self.w, self.e, self.f, self.g)

    def compsub(self) -> CompSubParams:
        return CompSubParams(self.q, self.n, self.a, self.b)

    def qvt(self) -> QvtParams:
        # the symbol-sum residue is shared with compsub
        return QvtParams(self.q, self.n, self.a, self.d)

    def burst(self) -> BurstParams:
        return BurstParams(self.q, self.n, self.h, self.w, self.e, self.f, self.g)

    def accepts(self, t: Sequence[int]) -> bool:
        return self.burst().accepts(t) and self.compsub().accepts(t) and self.qvt().accepts(t)


def final_member(x: Word, p: FinalParams) -> bool:
    _check_len(x, p.n)
    return p.accepts(x.symbols)


# ---------------------------------------------------------------- decoding


def decode(y: Word, p: FinalParams) -> Word:
    """Recover the codeword that ``y`` descends from."""
    if y.q != p.q:
        raise DomainError(f"word over q={y.q}, code over q={p.q}")
    s = Word(signature_tuple(y.symbols, y.q), y.alphabet)
    extra = len(s) - p.n
    if extra not in (0, 1, 2):
        raise DecodeError(f"not a valid channel output: signature length {len(s)} for n={p.n}")
    try:
        if extra == 0:
            # a complementary substitution moves the symbol sum by an odd
            # amount, so zero syndromes certify an untouched signature
            cs = p.compsub()
            x = s if cs.syndromes(s.symbols) == (0, 0) else compsub_decode(s, cs)
        elif extra == 1:
            x = qvt_decode_insertion(s, p.qvt())
        else:
            x = burst_decode_insertion(s, p.burst())
    except DecodeError as exc:
        raise DecodeError(f"uncorrectable input: {exc}") from None
    if not p.accepts(x.symbols):
        raise DecodeError(f"uncorrectable input: recovered {x} is not a codeword")
    return x


def signature_edit(s: Sequence[int], x: Sequence[int], q: int) -> str | None:
    """Classify how signature ``s`` differs from irreducible ``x``.

    Returns ``"none"``, ``"substitution"`` (one symbol complemented),
    ``"insertion"`` (one extra symbol), ``"burst"`` (an extra adjacent pair
    ``(r, b)`` preceded by ``p`` with ``b`` in ``{p, ~p}``) or ``None``.
    """
    s, x = tuple(s), tuple(x)
    top = q - 1
    extra = len(s) - len(x)
    if extra == 0:
        diffs = [i for i, (u, v) in enumerate(zip(s, x)) if u != v]
        if not diffs:
            return "none"
        if len(diffs) == 1 and s[diffs[0]] == top - x[diffs[0]]:
            return "substitution"
        return None
    if extra == 1:
        k = 0
        while k < len(x) and s[k] == x[k]:
            k += 1
        return "insertion" if s[k + 1 :] == x[k:] else None
    if extra == 2:
        for j in range(1, len(s) - 1):
            prev, second = s[j - 1], s[j + 1]
            if (second == prev or second == top - prev) and s[:j] + s[j + 2 :] == x:
                return "burst"
        return None
    return None


def decode_by_search(y: Word, p: FinalParams, codebook: Iterable[Word]) -> Word:
    """Reference decoder: the unique codeword whose signature edit reaches ``σ(y)``."""
    if y.q != p.q:
        raise DomainError(f"word over q={y.q}, code over q={p.q}")
    s = signature_tuple(y.symbols, y.q)
    hits = [x for x in codebook if signature_edit(s, x.symbols, p.q) is not None]
    if len(hits) != 1:
        raise DecodeError(f"{len(hits)} codewords match the received signature, expected 1")
    return hits[0]


# ------------------------------------------------------------ disjointness


@dataclass
class DisjointnessReport:
    words: int
    ct_budget: int
    pair_count: int
    max_cone_size: int
    violations: list[tuple[str, str, str]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def complete(self) -> bool:
        return not self.skipped

    @property
    def ok(self) -> bool:
        return self.complete and not self.violations

    def to_dict(self) -> dict:
        return {
            "words": self.words,
            "ct_budget": self.ct_budget,
            "pair_count": self.pair_count,
            "max_cone_size": self.max_cone_size,
            "violation_count": len(self.violations),
            "violations": [{"x": x, "y": y, "witness": w} for x, y, w in self.violations],
            "complete": self.complete,
            "skipped": self.skipped,
            "elapsed_s": round(self.elapsed_s, 6),
        }


def verify_disjoint_cones(
    codebook: Iterable[Word], ct_budget: int, limit: int = DEFAULT_LIMIT
) -> DisjointnessReport:
    """Check that the bounded noisy cones of distinct codewords never meet.

    Each cone is enumerated once and its words are tagged with their owner;
    a word seen under two owners is a violation.  This is equivalent to
    intersecting every pair.  Codewords whose cone exceeds ``limit`` are
    skipped and the report is flagged incomplete.
    """
    start = time.perf_counter()
    words = sorted(codebook)
    m = len(words)
    report = DisjointnessReport(m, ct_budget, m * (m - 1) // 2, 0)
    owner: dict[tuple, int] = {}
    seen_pairs: set[tuple[int, int]] = set()
    for idx, x in enumerate(words):
        try:
            cone = noisy_cone_tuples(x.symbols, x.q, ct_budget, limit)
        except EnumerationLimitError:
            report.skipped.append(str(x))
            continue
        report.max_cone_size = max(report.max_cone_size, len(cone))
        for t in sorted(cone):
            prev = owner.setdefault(t, idx)
            if prev != idx and (prev, idx) not in seen_pairs:
                seen_pairs.add((prev, idx))
                report.violations.append((str(words[prev]), str(x), str(Word(t, x.alphabet))))
    report.elapsed_s = time.perf_counter() - start
    return report
