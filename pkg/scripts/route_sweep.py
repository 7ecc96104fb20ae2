"""Random sweep comparing every pair of independent routes on random braid words.

Counts disagreements per check; a clean run prints zeros everywhere.

    python3 scripts/route_sweep.py --words 200 --max-n 4 --seed 1
"""

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from braidrep.braids import random_pure_word, random_word
from braidrep.burau import alexander_via_minor, burau, hfb_poincare_minor
from braidrep.gassner import gassner, specialize
from braidrep.multiindex import subsets
from braidrep.quantum import qhat, qhat_markov_check, super_trace, wedge_rep, wedge_rep_composed
from braidrep.states import hfb_poincare_from_states, tangle_delta, tangle_delta_from_states


@dataclass
class SweepConfig:
    words: int = 100
    max_n: int = 4
    max_len: int = 10
    seed: int = 0
    markov_trials: int = 3


def sweep(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    bad = Counter()
    seen = Counter()
    for _ in range(cfg.words):
        n = rng.randint(2, cfg.max_n)
        w = random_word(rng, n, rng.randint(0, cfg.max_len))
        idx = [s for s in subsets(n) if len(s)]
        j, k = rng.choice([(a, b) for a in idx for b in idx if len(a) == len(b)])
        checks = {
            "qhat~alexander": lambda: qhat(w).canonical_unit_form("q") == alexander_via_minor(w),
            "super_trace=0": lambda: super_trace(w).is_zero(),
            "wedge routes": lambda: wedge_rep(w) == wedge_rep_composed(w),
            "states=minor": lambda: hfb_poincare_from_states(w, j, k) == hfb_poincare_minor(w, j, k),
            "tangle routes": lambda: tangle_delta(w, j, k.complement())
            == tangle_delta_from_states(w, j, k.complement()),
            "markov": lambda: qhat_markov_check(w, cfg.markov_trials, rng.randrange(1 << 30)).ok,
        }
        pw = random_pure_word(rng, n, rng.randint(0, 3))
        checks["gassner->burau"] = lambda: specialize(gassner(pw), n) == burau(pw)
        for name, check in checks.items():
            seen[name] += 1
            if not check():
                bad[name] += 1
    return Counter({name: bad[name] for name in seen})


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=SweepConfig.words)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-len", type=int, default=SweepConfig.max_len)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(args.words, args.max_n, args.max_len, args.seed)
    start = time.perf_counter()
    result = sweep(cfg)
    for name, count in result.items():
        print(f"{name:<16} disagreements={count}")
    print(f"{cfg.words} words in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
