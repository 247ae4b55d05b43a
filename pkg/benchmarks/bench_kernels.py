"""Compare the numba and numpy kernel backends.

Run with ``python benchmarks/bench_kernels.py [--q 4] [--n 11] [--repeat 5]``.
Both backends are imported side by side, so the ``NOISYINS_BACKEND`` flag
does not matter here.  Outputs are checked for equality before timing.
"""

import argparse
import time

import numpy as np

from noisyins import kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--n", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    words = K.all_words(args.q, args.n)
    q = args.q
    pairs = [
        ("word_stats", lambda: K.word_stats_numpy(words), lambda: K.word_stats_numba(words)),
        ("irreducible_mask", lambda: K.irreducible_mask_numpy(words, q),
         lambda: K.irreducible_mask_numba(words, q)),
        ("signature_lengths", lambda: K.signature_lengths_numpy(words, q),
         lambda: K.signature_lengths_numba(words, q)),
    ]
    print(f"q={q} n={args.n} words={len(words)} best of {args.repeat}")
    print(f"{'kernel':<20}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, slow, fast in pairs:
        if not np.array_equal(slow(), fast()):  # also triggers compilation
            raise SystemExit(f"{name}: backends disagree")
        t_np = best_of(slow, args.repeat)
        t_nb = best_of(fast, args.repeat)
        print(f"{name:<20}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>10.1f}x")


if __name__ == "__main__":
    main()
