"""The noisy insertion channel.

Three primitives act on words: a complement insertion and a 1-tandem
duplication copy the symbol at index ``i`` (0-based) right after itself,
complemented or verbatim, and leave the word alone when ``i`` is past the
end.  A random insertion places an arbitrary symbol after the first ``i``
symbols.  A noisy descendant of ``x`` is anything reachable with any number
of the first two and at most one random insertion.

Cones are unbounded, so the enumeration helpers here cut them off at a
budget of complement/tandem events and refuse to grow past ``limit`` words.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from typing import Iterable

from .alphabet import Word
from .errors import DomainError, EnumerationLimitError
from .signature import compute_signature, is_irreducible, signature_tuple

COMPLEMENT = "complement"
TANDEM = "tandem"
RANDOM = "random"
KINDS = (COMPLEMENT, TANDEM, RANDOM)

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True, slots=True)
class Event:
    kind: str
    position: int
    symbol: int | None = None

    def __str__(self) -> str:
        if self.symbol is None:
            return f"{self.kind} {self.position}"
        return f"{self.kind} {self.position} {self.symbol}"

    @classmethod
    def parse(cls, line: str) -> Event:
        parts = line.split()
        if len(parts) not in (2, 3):
            raise DomainError(f"cannot parse event {line!r}")
        symbol = int(parts[2]) if len(parts) == 3 else None
        return cls(parts[0], int(parts[1]), symbol)


@dataclass(frozen=True, slots=True)
class ChannelTrace:
    events: tuple[Event, ...] = ()
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if sum(ev.kind == RANDOM for ev in self.events) > 1:
            raise DomainError("a trace may carry at most one random insertion")

    def __len__(self) -> int:
        return len(self.events)

    @property
    def has_random(self) -> bool:
        return any(ev.kind == RANDOM for ev in self.events)

    @classmethod
    def of(cls, events: Iterable, seed: int | None = None) -> ChannelTrace:
        """Build from ``(kind, position[, symbol])`` tuples or Events."""
        evs = [ev if isinstance(ev, Event) else Event(*ev) for ev in events]
        return cls(tuple(evs), seed)


# ------------------------------------------------------------ tuple kernels


def _comp_ins(t: tuple, i: int, top: int) -> tuple:
    if i >= len(t):
        return t
    return t[: i + 1] + (top - t[i],) + t[i + 1 :]


def _tandem(t: tuple, i: int) -> tuple:
    if i >= len(t):
        return t
    return t[: i + 1] + (t[i],) + t[i + 1 :]


def _ct_children(t: tuple, top: int) -> Iterable[tuple]:
    for i in range(len(t)):
        head, v, tail = t[:i], t[i], t[i + 1 :]
        yield head + (v, v) + tail
        yield head + (v, top - v) + tail


def _random_children(t: tuple, q: int) -> Iterable[tuple]:
    for i in range(len(t) + 1):
        head, tail = t[:i], t[i:]
        for r in range(q):
            yield head + (r,) + tail


# --------------------------------------------------------------- primitives


def complement_insertion(x: Word, i: int) -> Word:
    if i < 0:
        raise DomainError(f"insertion index must be >= 0, got {i}")
    return Word(_comp_ins(x.symbols, i, x.q - 1), x.alphabet)


def tandem_duplication(x: Word, i: int) -> Word:
    if i < 0:
        raise DomainError(f"insertion index must be >= 0, got {i}")
    return Word(_tandem(x.symbols, i), x.alphabet)


def random_insertion(x: Word, i: int, r: int) -> Word:
    if not 0 <= i <= len(x):
        raise DomainError(f"random insertion index {i} outside [0, {len(x)}]")
    if not 0 <= r < x.q:
        raise DomainError(f"symbol {r} outside Z_{x.q}")
    return Word(x.symbols[:i] + (r,) + x.symbols[i:], x.alphabet)


def apply_trace(x: Word, trace: ChannelTrace) -> Word:
    y = x
    for k, ev in enumerate(trace.events):
        try:
            if ev.kind == COMPLEMENT:
                y = complement_insertion(y, ev.position)
            elif ev.kind == TANDEM:
                y = tandem_duplication(y, ev.position)
            elif ev.kind == RANDOM:
                if ev.symbol is None:
                    raise DomainError("random event without a symbol")
                y = random_insertion(y, ev.position, ev.symbol)
            else:
                raise DomainError(f"unknown event kind {ev.kind!r}")
        except DomainError as exc:
            raise DomainError(f"event {k} ({ev}): {exc}") from None
    return y


def sample_noisy_trace(x: Word, ct_budget: int, with_random: bool, seed: int) -> ChannelTrace:
    """Draw ``ct_budget`` complement/tandem events plus an optional random one.

    Kinds, positions and the random symbol are uniform; every position lands
    inside the word so each event lengthens it by one.  The random event is
    placed at a uniform slot in the event order.
    """
    if ct_budget < 0:
        raise DomainError(f"ct_budget must be >= 0, got {ct_budget}")
    rng = _random.Random(seed)
    n_events = ct_budget + (1 if with_random else 0)
    random_slot = rng.randrange(n_events) if with_random else -1
    length = len(x)
    events = []
    for k in range(n_events):
        if k == random_slot:
            events.append(Event(RANDOM, rng.randint(0, length), rng.randrange(x.q)))
        elif length == 0:
            continue  # nothing to copy
        else:
            events.append(Event(rng.choice((COMPLEMENT, TANDEM)), rng.randrange(length)))
        length += 1
    return ChannelTrace(tuple(events), seed)


# ------------------------------------------------------------------- cones


def _check_limit(projected: int, limit: int) -> None:
    if projected > limit:
        raise EnumerationLimitError("descendant cone too large", projected, limit)


def ct_cone_tuples(x: tuple, q: int, budget: int, limit: int = DEFAULT_LIMIT) -> set[tuple]:
    """Words reachable from ``x`` with at most ``budget`` complement/tandem events."""
    if budget < 0:
        raise DomainError(f"budget must be >= 0, got {budget}")
    top = q - 1
    seen = {x}
    frontier = [x]
    for _ in range(budget):
        if not frontier:
            break
        _check_limit(len(seen) + 2 * sum(len(t) for t in frontier), limit)
        nxt = []
        for t in frontier:
            for c in _ct_children(t, top):
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def noisy_cone_tuples(x: tuple, q: int, ct_budget: int, limit: int = DEFAULT_LIMIT) -> set[tuple]:
    """Words reachable with at most ``ct_budget`` complement/tandem events and
    at most one random insertion anywhere in the event order."""
    if ct_budget < 0:
        raise DomainError(f"ct_budget must be >= 0, got {ct_budget}")
    top = q - 1

    def add_random(words, into, out):
        for t in words:
            for c in _random_children(t, q):
                if c not in into:
                    into.add(c)
                    out.append(c)

    clean = {x}
    clean_frontier = [x]
    noisy: set[tuple] = set()
    noisy_frontier: list[tuple] = []
    add_random(clean_frontier, noisy, noisy_frontier)
    for _ in range(ct_budget):
        growth = sum(len(t) for t in clean_frontier) * (2 + q) + 2 * sum(len(t) for t in noisy_frontier)
        _check_limit(len(clean) + len(noisy) + growth, limit)
        next_clean = []
        for t in clean_frontier:
            for c in _ct_children(t, top):
                if c not in clean:
                    clean.add(c)
                    next_clean.append(c)
        next_noisy = []
        for t in noisy_frontier:
            for c in _ct_children(t, top):
                if c not in noisy:
                    noisy.add(c)
                    next_noisy.append(c)
        add_random(next_clean, noisy, next_noisy)
        clean_frontier, noisy_frontier = next_clean, next_noisy
    return clean | noisy


def enumerate_ct_descendants(x: Word, budget: int, limit: int = DEFAULT_LIMIT) -> set[Word]:
    return {Word(t, x.alphabet) for t in ct_cone_tuples(x.symbols, x.q, budget, limit)}


def enumerate_noisy_descendants(x: Word, ct_budget: int, limit: int = DEFAULT_LIMIT) -> set[Word]:
    return {Word(t, x.alphabet) for t in noisy_cone_tuples(x.symbols, x.q, ct_budget, limit)}


# --------------------------------------------------------------- signatures


def cones_intersect(x: Word, y: Word) -> bool:
    """Whether the complement/tandem cones of ``x`` and ``y`` meet.

    They meet exactly when the two signatures agree, so no enumeration is
    needed.
    """
    if x.alphabet != y.alphabet:
        raise DomainError("words over different alphabets")
    if not len(x) or not len(y):
        raise DomainError("cones_intersect needs nonempty words")
    return signature_tuple(x.symbols, x.q) == signature_tuple(y.symbols, y.q)


def is_ct_descendant_of_irreducible(y: Word, x: Word) -> bool:
    if not is_irreducible(x):
        raise DomainError(f"{x} is not irreducible")
    if x.alphabet != y.alphabet:
        raise DomainError("words over different alphabets")
    return compute_signature(y).word == x
