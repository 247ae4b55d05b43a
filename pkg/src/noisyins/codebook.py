"""Codebook enumeration, best-parameter scans, the codebook file, rank/unrank.

Every code in this package is a fibre of a residue map: a word belongs to
the code with parameters ``k`` iff its residue tuple equals ``k``.  One
kernel pass over the candidate words therefore yields both single
codebooks and the size of every code in a family at once.

Codebook files are plain text::

    # noisyins codebook
    # family=final
    # q=4
    # n=6
    # a=0
    ...
    # T=6
    # P=7
    # size=1
    # order=lex
    # version=noisyins 0.1.0
    012012

and are byte-identical for identical parameters.  The in-memory build
timestamp is deliberately not written.
"""

from __future__ import annotations

import bisect
import dataclasses
import datetime as _dt
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np

from . import kernels as K
from ._version import TOOL_ID
from .alphabet import Word, as_alphabet, parse_word
from .channel import DEFAULT_LIMIT
from .codes import BurstParams, CompSubParams, QvtParams, SvtParams, rll_threshold
from .errors import DomainError, EnumerationLimitError
from .final import FinalParams
from .signature import count_irr

FAMILIES = {
    "compsub": CompSubParams,
    "qvt": QvtParams,
    "svt": SvtParams,
    "burst": BurstParams,
    "final": FinalParams,
}
ORDER_TAG = "lex"


def _param_names(family: str) -> list[str]:
    return [f.name for f in dataclasses.fields(FAMILIES[family]) if f.name not in ("q", "n", "P")]


def params_from_key(family: str, q: int, n: int, key, P: int | None = None):
    kwargs = dict(zip(_param_names(family), (int(v) for v in key)))
    if family == "svt":
        kwargs["P"] = P
    return FAMILIES[family](q=q, n=n, **kwargs)


def params_key(params) -> tuple[int, ...]:
    return tuple(getattr(params, name) for name in _param_names(params.family))


# ------------------------------------------------------------ residue maps


def candidate_words(family: str, q: int, n: int, limit: int = DEFAULT_LIMIT) -> np.ndarray:
    """Words the family draws from: Irr(n) for burst/final, all of Z_q^n otherwise."""
    as_alphabet(q)
    if family in ("burst", "final"):
        if n < 4 or n % 2:
            raise DomainError(f"{family} codes need even n >= 4, got {n}")
        total = count_irr(q, n)
        if total > limit:
            raise EnumerationLimitError(f"Irr({n}) over q={q} too large", total, limit)
        return K.irreducible_words(q, n)
    total = q**n
    if total > limit:
        raise EnumerationLimitError(f"Z_{q}^{n} too large", total, limit)
    return K.all_words(q, n)


def residue_keys(family: str, words: np.ndarray, q: int, n: int, P: int | None = None):
    """Residue tuple of every row and a mask of rows admissible at all."""
    st = K.word_stats(words)
    m = st.shape[0]
    valid = np.ones(m, dtype=bool)
    if family == "compsub":
        cols = [st[:, K.SUM] % (2 * q), st[:, K.WSUM] % (q * n)]
    elif family == "qvt":
        cols = [st[:, K.SUM] % (2 * q), st[:, K.VT] % n]
    elif family == "svt":
        if P is None:
            raise DomainError("svt residues need the window size P")
        cols = [st[:, K.SVT] % (P + 1), st[:, K.SUM] % q, st[:, K.ASC] % 2]
    elif family in ("burst", "final"):
        T = rll_threshold(q, n)
        P = T + 1
        top = K.word_stats(words[:, 0::2])
        bottom = K.word_stats(words[:, 1::2])
        valid = K.irreducible_mask(words, q) & (top[:, K.RUN] <= T)
        cols = [
            top[:, K.SUM] % (2 * q),
            top[:, K.VT] % (n // 2),
            bottom[:, K.SVT] % (P + 1),
            bottom[:, K.SUM] % q,
            bottom[:, K.ASC] % 2,
        ]
        if family == "final":
            cols = [st[:, K.SUM] % (2 * q), st[:, K.WSUM] % (q * n), st[:, K.VT] % n] + cols
    else:
        raise DomainError(f"unknown code family {family!r}")
    keys = np.stack(cols, axis=1) if cols else np.zeros((m, 0), dtype=np.int64)
    return keys, valid


def residue_counts(
    family: str, q: int, n: int, P: int | None = None, limit: int = DEFAULT_LIMIT
) -> dict[tuple[int, ...], int]:
    """Size of every nonempty code of the family, keyed by parameter tuple."""
    words = candidate_words(family, q, n, limit)
    keys, valid = residue_keys(family, words, q, n, P)
    uniq, counts = np.unique(keys[valid], axis=0, return_counts=True)
    return {tuple(int(v) for v in row): int(c) for row, c in zip(uniq, counts)}


def scan_best(family: str, q: int, n: int, P: int | None = None, limit: int = DEFAULT_LIMIT):
    """Largest code of the family; ties go to the lexicographically smallest tuple."""
    counts = residue_counts(family, q, n, P, limit)
    if not counts:
        raise DomainError(f"no {family} codewords for q={q}, n={n}")
    key = min(counts, key=lambda k: (-counts[k], k))
    return params_from_key(family, q, n, key, P), counts[key]


def scan_best_params(q: int, n: int, limit: int = DEFAULT_LIMIT) -> tuple[FinalParams, int]:
    return scan_best("final", q, n, limit=limit)


# ---------------------------------------------------------------- codebook


@dataclass
class Codebook:
    params: object
    words: tuple[Word, ...]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.words = tuple(self.words)
        for prev, cur in zip(self.words, self.words[1:]):
            if not prev < cur:
                raise DomainError("codebook words must be strictly increasing")

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, x: Word) -> bool:
        i = bisect.bisect_left(self.words, x)
        return i < len(self.words) and self.words[i] == x

    @property
    def family(self) -> str:
        return self.params.family

    def to_text(self) -> str:
        p = self.params
        lines = ["# noisyins codebook", f"# family={p.family}", f"# q={p.q}", f"# n={p.n}"]
        lines += [f"# {name}={getattr(p, name)}" for name in _param_names(p.family)]
        if p.family in ("burst", "final"):
            lines += [f"# T={p.T}", f"# P={p.P}"]
        elif p.family == "svt":
            lines.append(f"# P={p.P}")
        lines += [
            f"# size={len(self.words)}",
            f"# order={self.provenance.get('order', ORDER_TAG)}",
            f"# version={self.provenance.get('version', TOOL_ID)}",
        ]
        lines += [str(x) for x in self.words]
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.to_text(), encoding="ascii")

    @classmethod
    def from_text(cls, text: str, check: bool = True) -> Codebook:
        header: dict[str, str] = {}
        body = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition("=")
                if sep:
                    header[key.strip()] = value.strip()
            else:
                body.append(line)
        try:
            family = header["family"]
            q, n = int(header["q"]), int(header["n"])
            key = [int(header[name]) for name in _param_names(family)]
            P = int(header["P"]) if family == "svt" else None
        except (KeyError, ValueError) as exc:
            raise DomainError(f"malformed codebook header: {exc}") from None
        params = params_from_key(family, q, n, key, P)
        words = [parse_word(line, q) for line in body]
        if check:
            bad = [str(x) for x in words if len(x) != n or not params.accepts(x.symbols)]
            if bad:
                raise DomainError(f"codebook lists non-members: {', '.join(bad[:5])}")
            if "size" in header and int(header["size"]) != len(words):
                raise DomainError("codebook size header disagrees with its word list")
        prov = {"order": header.get("order", ORDER_TAG), "version": header.get("version", "")}
        return cls(params, tuple(words), prov)

    @classmethod
    def read(cls, path, check: bool = True) -> Codebook:
        return cls.from_text(Path(path).read_text(encoding="ascii"), check)


def build_codebook(params, limit: int = DEFAULT_LIMIT) -> Codebook:
    """All codewords of ``params`` in lexicographic order."""
    family, q, n = params.family, params.q, params.n
    words = candidate_words(family, q, n, limit)
    keys, valid = residue_keys(family, words, q, n, getattr(params, "P", None))
    hit = valid & (keys == np.asarray(params_key(params), dtype=np.int64)).all(axis=1)
    alphabet = as_alphabet(q)
    members = tuple(Word(tuple(int(v) for v in row), alphabet) for row in words[hit])
    prov = {
        "order": ORDER_TAG,
        "version": TOOL_ID,
        "built": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }
    return Codebook(params, members, prov)


def encode_index(k: int, codebook: Codebook) -> Word:
    if not 0 <= k < len(codebook):
        raise DomainError(f"index {k} outside [0, {len(codebook)})")
    return codebook.words[k]


def word_to_index(x: Word, codebook: Codebook) -> int:
    i = bisect.bisect_left(codebook.words, x)
    if i == len(codebook.words) or codebook.words[i] != x:
        raise DomainError(f"{x} is not a codeword")
    return i
