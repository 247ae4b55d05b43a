from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from noisyins import (
    BurstParams,
    CompSubParams,
    DecodeError,
    DomainError,
    QvtParams,
    SvtParams,
    Word,
    ascent_profile,
    build_codebook,
    burst_decode_insertion,
    burst_member,
    compsub_decode,
    compsub_member,
    deinterleave,
    interleave_rows,
    max_run_length,
    qvt_decode_insertion,
    qvt_member,
    residue_counts,
    rll_threshold,
    scan_best,
    svt_decode_deletion,
    svt_decode_insertion,
    svt_member,
)

from . import oracles
from .conftest import W

Q = 4


def test_rll_threshold_exact():
    # ceil(3 log_q n) + 2, including the exact case n = q
    for q, n in [(4, 4), (4, 6), (4, 8), (4, 16), (4, 20), (6, 6), (6, 36), (8, 10)]:
        assert rll_threshold(q, n) == oracles.rll_T(q, n)
    assert rll_threshold(4, 4) == 5
    assert rll_threshold(4, 64) == 11


# -------------------------------------------------------------- compsub


def test_compsub_member_examples():
    p = CompSubParams(Q, 6, 0, 0)
    assert compsub_member(W("000000"), p)
    assert compsub_member(W("032300"), p)
    assert not compsub_member(W("100000"), p)
    with pytest.raises(DomainError):
        compsub_member(W("00000"), p)


@pytest.mark.parametrize("bad", [dict(a=8), dict(b=24), dict(a=-1)])
def test_compsub_param_ranges(bad):
    kw = dict(q=Q, n=6, a=0, b=0) | bad
    with pytest.raises(DomainError):
        CompSubParams(**kw)


def test_compsub_decode_examples():
    p = CompSubParams(Q, 6, 0, 0)
    assert compsub_decode(W("003000"), p) == W("000000")
    assert compsub_decode(W("032300"), p) == W("032300")
    assert compsub_decode(W("002300"), p) == W("032300")


def _search_decode(t, q, a, b):
    if oracles.compsub_ok(t, q, a, b):
        return {t}
    return {z for z in oracles.comp_substitutions(t, q) if oracles.compsub_ok(z, q, a, b)}


@pytest.mark.parametrize("n,a,b", [(5, 0, 0), (5, 3, 7), (6, 0, 0), (6, 5, 17)])
def test_compsub_decode_agrees_with_search_on_every_word(n, a, b):
    p = CompSubParams(Q, n, a, b)
    for t in oracles.words(Q, n):
        cands = _search_decode(t, Q, a, b)
        assert len(cands) <= 1
        if cands:
            assert compsub_decode(Word.of(t, Q), p).symbols == cands.pop()
        else:
            with pytest.raises(DecodeError):
                compsub_decode(Word.of(t, Q), p)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_compsub_codes_partition_space(n):
    params = [CompSubParams(Q, n, a, b) for a in range(2 * Q) for b in range(Q * n)]
    for t in oracles.words(Q, n):
        x = Word.of(t, Q)
        assert sum(compsub_member(x, p) for p in params) == 1


@pytest.mark.parametrize("n", [4, 6])
def test_compsub_pigeonhole(n):
    counts = residue_counts("compsub", Q, n)
    assert sum(counts.values()) == Q**n
    assert max(counts.values()) >= Fraction(Q ** (n - 2), 2 * n)


def test_example_code_size():
    assert len(build_codebook(CompSubParams(Q, 6, 0, 0))) == 33


# ------------------------------------------------------------------ qvt


def test_qvt_member_examples():
    assert ascent_profile(W("0000")).bits == (1, 1, 1, 1)
    assert qvt_member(W("0000"), QvtParams(Q, 4, 0, 2))
    assert not qvt_member(W("0000"), QvtParams(Q, 4, 0, 0))


@given(st.lists(st.integers(0, Q - 1), min_size=1, max_size=25))
def test_qvt_self_consistent_residues(symbols):
    x = Word.of(symbols, Q)
    n = len(x)
    bits = ascent_profile(x).bits
    assert bits[0] == 1
    assert all(b == (symbols[i] >= symbols[i - 1]) for i, b in enumerate(bits) if i)
    c = sum(symbols) % (2 * Q)
    d = sum(i * b for i, b in enumerate(bits)) % n
    assert qvt_member(x, QvtParams(Q, n, c, d))
    assert oracles.qvt_ok(tuple(symbols), Q, c, d)


@pytest.mark.parametrize("n,c,d", [(4, 0, 2), (4, 5, 1), (5, 2, 0), (6, 0, 3), (6, 7, 5)])
def test_qvt_corrects_every_insertion(n, c, d):
    p = QvtParams(Q, n, c, d)
    book = [t for t in oracles.words(Q, n) if oracles.qvt_ok(t, Q, c, d)]
    assert [x.symbols for x in build_codebook(p)] == book
    for t in book:
        for y in oracles.insertions(t, Q):
            assert qvt_decode_insertion(Word.of(y, Q), p).symbols == t


def test_qvt_duplicate_collapses_and_length_checked():
    p = QvtParams(Q, 4, 0, 2)
    assert qvt_decode_insertion(W("00000"), p) == W("0000")
    with pytest.raises(DomainError):
        qvt_decode_insertion(W("0000"), p)
    with pytest.raises(DecodeError):
        qvt_decode_insertion(W("01230"), QvtParams(Q, 4, 7, 3))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_qvt_refines_classical_vt(n):
    # the mod-2q symbol sum refines Tenengolts' mod-q sum
    for c in range(2 * Q):
        for d in range(n):
            for t in oracles.words(Q, n):
                if oracles.qvt_ok(t, Q, c, d):
                    assert sum(t) % Q == c % Q
                    assert sum((i - 1) * b for i, b in enumerate(oracles.ascent(t), 1)) % n == d


# ------------------------------------------------------------------ svt


def test_svt_member_examples():
    assert svt_member(W("0000"), SvtParams(Q, 4, 3, 2, 0, 0))
    assert not svt_member(W("0000"), SvtParams(Q, 4, 3, 0, 0, 0))


@given(st.lists(st.integers(0, Q - 1), min_size=1, max_size=20), st.integers(1, 6))
def test_svt_self_consistent(symbols, P):
    bits = oracles.ascent(symbols)
    e = sum(i * b for i, b in enumerate(bits, 1)) % (P + 1)
    p = SvtParams(Q, len(symbols), P, e, sum(symbols) % Q, sum(bits) % 2)
    assert svt_member(Word.of(symbols, Q), p)


def _svt_book(n, P):
    p, _ = scan_best("svt", Q, n, P)
    book = [t for t in oracles.words(Q, n) if oracles.svt_ok(t, Q, P, p.e, p.f, p.g)]
    assert [x.symbols for x in build_codebook(p)] == book
    return p, book


@pytest.mark.parametrize("n,P", [(4, 2), (4, 3), (6, 2), (6, 3)])
def test_svt_deletion_in_window(n, P):
    p, book = _svt_book(n, P)
    for t in book:
        for j in range(1, n + 1):
            y = Word.of(t[: j - 1] + t[j:], Q)
            for start in range(max(1, j - P + 1), j + 1):
                assert svt_decode_deletion(y, p, start).symbols == t
            assert svt_decode_deletion(y, p, j).symbols == t  # window of one


@pytest.mark.parametrize("n,P", [(4, 2), (6, 3)])
def test_svt_insertion_in_window(n, P):
    p, book = _svt_book(n, P)
    for t in book:
        for j in range(1, n + 2):
            for s in range(Q):
                y = Word.of(t[: j - 1] + (s,) + t[j - 1 :], Q)
                for start in range(max(1, j - P + 1), j + 1):
                    assert svt_decode_insertion(y, p, start).symbols == t


@pytest.mark.parametrize("n,P", [(4, 2), (6, 2)])
def test_svt_window_excluding_deletion_never_recovers(n, P):
    p, book = _svt_book(n, P)
    for t in book:
        for j in range(1, n + 1):
            y = t[: j - 1] + t[j:]
            for start in range(1, n + 1):
                window = range(start, min(start + P - 1, n) + 1)
                if t in {y[: k - 1] + (s,) + y[k - 1 :] for k in window for s in range(Q)}:
                    continue
                try:
                    got = svt_decode_deletion(Word.of(y, Q), p, start).symbols
                except DecodeError:
                    continue
                assert got != t


def test_svt_wrong_length():
    p = SvtParams(Q, 4, 2, 0, 0, 0)
    with pytest.raises(DomainError):
        svt_decode_deletion(W("0000"), p, 1)
    with pytest.raises(DomainError):
        svt_decode_insertion(W("0000"), p, 1)
    with pytest.raises(DomainError):
        svt_decode_deletion(W("000"), p, 0)


# ------------------------------------------------------ runs and interleave


def test_max_run_length_examples():
    assert max_run_length(W("000100")) == 3
    assert max_run_length(W("0123")) == 1
    assert max_run_length(W("")) == 0


@given(st.lists(st.integers(0, 3), max_size=40))
def test_max_run_length_matches_groupby(symbols):
    assert max_run_length(Word.of(symbols, Q)) == oracles.longest_run(symbols)


def test_interleave_examples():
    assert deinterleave(W("123456", 8)) == (W("135", 8), W("246", 8))
    assert deinterleave(W("10")) == (W("1"), W("0"))
    with pytest.raises(DomainError):
        deinterleave(W("101"))
    with pytest.raises(DomainError):
        interleave_rows(W("1"), W("01"))


@given(st.lists(st.integers(0, 3), max_size=20).map(lambda s: s[: len(s) // 2 * 2]))
def test_interleave_round_trip(symbols):
    x = Word.of(symbols, Q)
    assert interleave_rows(*deinterleave(x)) == x


# ---------------------------------------------------------------- burst


def test_burst_params_reject_short_or_odd():
    for n in (2, 5):
        with pytest.raises(DomainError):
            BurstParams(Q, n, 0, 0, 0, 0, 0)


def test_burst_gates():
    p = BurstParams(Q, 6, 0, 0, 0, 0, 0)
    assert not burst_member(W("001212"), p)
    # odd row 0000000000 has a run of 10 > T = 9 at n = 20
    x = W("01" * 10)
    top, bottom = x.symbols[0::2], x.symbols[1::2]
    bits = oracles.ascent(bottom)
    p = BurstParams(
        Q, 20, sum(top) % 8,
        sum((i - 1) * b for i, b in enumerate(oracles.ascent(top), 1)) % 10,
        sum(i * b for i, b in enumerate(bits, 1)) % (rll_threshold(Q, 20) + 2),
        sum(bottom) % Q, sum(bits) % 2,
    )
    assert p.T == 9
    assert qvt_member(Word.of(top, Q), p.row1()) and svt_member(Word.of(bottom, Q), p.row2())
    assert not burst_member(x, p)


def test_burst_member_matches_conjunction_oracle():
    tuples = [(0, 0, 0, 0, 0), (3, 2, 6, 1, 1), (5, 1, 3, 2, 0), (7, 0, 7, 3, 1)]
    for t in oracles.words(Q, 6):
        x = Word.of(t, Q)
        for key in tuples:
            assert burst_member(x, BurstParams(Q, 6, *key)) == oracles.burst_ok(t, Q, *key)


def _burst_key(t, q):
    n = len(t)
    P = oracles.rll_T(q, n) + 1
    top, bottom = t[0::2], t[1::2]
    bits = oracles.ascent(bottom)
    return (
        sum(top) % (2 * q),
        sum((i - 1) * b for i, b in enumerate(oracles.ascent(top), 1)) % (n // 2),
        sum(i * b for i, b in enumerate(bits, 1)) % (P + 1),
        sum(bottom) % q,
        sum(bits) % 2,
    )


@pytest.mark.parametrize("n", [4, 6])
def test_burst_code_sizes_match_conjunction_oracle(n):
    brute = {}
    for t in oracles.words(Q, n):
        key = _burst_key(t, Q)
        if oracles.burst_ok(t, Q, *key):
            brute[key] = brute.get(key, 0) + 1
    assert brute == residue_counts("burst", Q, n)


@pytest.mark.parametrize("n", [4, 6])
def test_burst_corrects_every_pair_insertion(n):
    for key in list(residue_counts("burst", Q, n))[:: 7]:
        p = BurstParams(Q, n, *key)
        for x in build_codebook(p):
            for y in oracles.pair_insertions(x.symbols, Q):
                assert burst_decode_insertion(Word.of(y, Q), p) == x


def test_burst_decode_errors():
    p = BurstParams(Q, 6, 0, 0, 0, 0, 0)
    with pytest.raises(DomainError):
        burst_decode_insertion(W("0120"), p)
    with pytest.raises(DecodeError):
        burst_decode_insertion(W("00000000"), p)
