"""Acceptance criteria 1-10, each checked at its stated tolerance and time limit.

Every criterion prints one ``C<k> PASS|FAIL`` line (shown with ``-s`` and
collected again in the terminal summary).
"""

import random
import time
from contextlib import contextmanager

import pytest

from braidrep.braids import BraidWord, invert, is_pure, parse_braid, random_pure_word, random_word
from braidrep.burau import alexander_via_minor, burau, hfb_poincare_minor, trivial_braid_necessary
from braidrep.gassner import colored_burau, gassner, specialize
from braidrep.multiindex import subsets
from braidrep.quantum import alternating_diagonal_sum, qhat, qhat_markov_check, super_trace
from braidrep.ring import Q, RingMatrix
from braidrep.states import cfk_weight_bijection, gamma_terms, hfb_poincare_from_states, tangle_delta, \
    tangle_delta_from_states

from conftest import ACCEPTANCE_KEY, T

SEED = 20240611


@pytest.fixture
def criterion(request):
    @contextmanager
    def run(number: int, title: str, limit: float):
        start = time.perf_counter()
        status, detail = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            if elapsed >= limit:
                detail = f" (runtime {elapsed:.2f}s exceeds {limit:g}s)"
            else:
                status = "PASS"
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            detail = f" ({type(exc).__name__}: {exc})".splitlines()[0]
            raise
        finally:
            line = f"C{number} {status} {title} [{elapsed:.2f}s < {limit:g}s]{detail}"
            print(line)
            request.config.stash[ACCEPTANCE_KEY].append(line)
        assert elapsed < limit, detail

    return run


def nonempty_pairs(n):
    idx = [s for s in subsets(n) if len(s)]
    return [(j, k) for j in idx for k in idx if len(j) == len(k)]


def relation_pairs(n):
    """Both sides of every braid relation in B_n, positive and negative letters."""
    out = []
    for s in (1, -1):
        for i in range(1, n - 1):
            a, b = s * i, s * (i + 1)
            out.append(((a, b, a), (b, a, b)))
        for i in range(1, n):
            for j in range(i + 2, n):
                out.append(((s * i, j), (j, s * i)))
                out.append(((s * i, -j), (-j, s * i)))
    return out


def test_c1_burau_braid_relations(criterion):
    with criterion(1, "Burau braid relations, n <= 6", 1.0):
        checked = 0
        for n in range(2, 7):
            for left, right in relation_pairs(n):
                assert burau(BraidWord(n, left)) == burau(BraidWord(n, right)), (n, left, right)
                checked += 1
            for i in range(1, n):
                assert burau(BraidWord(n, (i, -i))).is_identity()
        assert checked > 0


def test_c2_alexander_examples(criterion):
    with criterion(2, "trefoil, Hopf, figure-eight Alexander polynomials", 1.0):
        trefoil = T(1, -1, 1)
        hopf = T(-1, 1)
        figure_eight = T(1, -3, 1)
        assert alexander_via_minor(parse_braid("2: 1 1 1")).equal_up_to_unit(trefoil, "q")
        assert alexander_via_minor(parse_braid("2: 1 1")).equal_up_to_unit(hopf, "q")
        assert alexander_via_minor(parse_braid("3: 1 -2 1 -2")).equal_up_to_unit(figure_eight, "q")


def test_c3_qhat_matches_alexander(criterion):
    rng = random.Random(SEED + 3)
    with criterion(3, "qhat = Alexander minor up to unit, 200 words", 30.0):
        for _ in range(200):
            w = random_word(rng, rng.randint(2, 5), rng.randint(0, 12))
            assert qhat(w).canonical_unit_form("q") == alexander_via_minor(w), w


def test_c4_euler_characteristic(criterion):
    rng = random.Random(SEED + 4)
    with criterion(4, "state sum = minor, all pairs n=3 x 50 plus 100 cases n=4", 60.0):
        pairs3 = nonempty_pairs(3)
        for _ in range(50):
            w = random_word(rng, 3, rng.randint(0, 8))
            for j, k in pairs3:
                assert hfb_poincare_from_states(w, j, k) == hfb_poincare_minor(w, j, k), (w, j, k)
        pairs4 = nonempty_pairs(4)
        for _ in range(100):
            w = random_word(rng, 4, rng.randint(0, 8))
            j, k = rng.choice(pairs4)
            assert hfb_poincare_from_states(w, j, k) == hfb_poincare_minor(w, j, k), (w, j, k)


def test_c5_super_trace(criterion):
    rng = random.Random(SEED + 5)
    with criterion(5, "super trace vanishes and exterior-trace identity, 100 words", 30.0):
        for _ in range(100):
            w = random_word(rng, rng.randint(1, 4), rng.randint(0, 12))
            assert super_trace(w).is_zero(), w
            det = (RingMatrix.identity(w.n, Q) - burau(w)).det()
            assert alternating_diagonal_sum(w) == det, w


def test_c6_bijection(criterion):
    rng = random.Random(SEED + 6)
    with criterion(6, "CFK to Gamma weight bijection, 50 words", 60.0):
        for _ in range(50):
            w = random_word(rng, rng.randint(2, 3), rng.randint(0, 8))
            pairs = cfk_weight_bijection(w)
            assert len(pairs) == len(gamma_terms(w)), w


def test_c7_tangle_routes(criterion):
    rng = random.Random(SEED + 7)
    with criterion(7, "tangle invariant routes and vanishing, n=3 x 20 words", 60.0):
        idx = subsets(3)
        for _ in range(20):
            w = random_word(rng, 3, rng.randint(0, 8))
            for js in idx:
                for k in idx:
                    a = tangle_delta(w, js, k)
                    b = tangle_delta_from_states(w, js, k)
                    assert a.equal_up_to_unit(b, "q"), (w, js, k)
                    if len(js) + len(k) != 3:
                        assert a.is_zero() and b.is_zero(), (w, js, k)


def test_c8_gassner(criterion):
    rng = random.Random(SEED + 8)
    with criterion(8, "Gassner specializes to Burau, colored braid relations", 30.0):
        for _ in range(50):
            w = random_pure_word(rng, rng.randint(2, 4), rng.randint(0, 3))
            assert is_pure(w)
            assert specialize(gassner(w), w.n) == burau(w), w
        for n in range(2, 6):
            for left, right in relation_pairs(n):
                a = colored_burau(BraidWord(n, left))
                b = colored_burau(BraidWord(n, right))
                assert a.matrix == b.matrix and a.coloring == b.coloring, (n, left, right)
            for i in range(1, n):
                back = colored_burau(BraidWord(n, (i, -i)))
                assert back.matrix.is_identity() and back.coloring.is_identity()


def test_c9_markov(criterion):
    rng = random.Random(SEED + 9)
    with criterion(9, "qhat Markov invariance, 100 conjugations and 50 stabilizations", 60.0):
        failures = []
        for seed in range(20):
            w = random_word(rng, rng.randint(2, 4), rng.randint(1, 10))
            report = qhat_markov_check(w, 5, seed, "conjugate")
            assert len(report.moves) == 5
            failures += report.failures
        for seed in range(25):
            w = random_word(rng, rng.randint(1, 4), rng.randint(0, 10))
            report = qhat_markov_check(w, 2, seed, "stabilize")
            assert all(m.startswith("stabilize") for m in report.moves)
            failures += report.failures
        assert not failures, failures[:3]


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    return a * b * invert(a) * invert(b)


def test_c10_trivial_braid_condition(criterion):
    rng = random.Random(SEED + 10)
    with criterion(10, "trivial-braid necessary condition", 1.0):
        for _ in range(10):
            n = rng.randint(2, 5)
            w = BraidWord.identity(n)
            for _ in range(rng.randint(1, 3)):
                i, j = rng.randint(1, n - 1), rng.randint(1, n - 1)
                w = w * commutator(BraidWord(n, (i, i)), BraidWord(n, (j, j)))
            assert trivial_braid_necessary(w), w
        for _ in range(10):
            u = random_word(rng, rng.randint(2, 5), rng.randint(1, 8))
            assert trivial_braid_necessary(u * invert(u)), u
        assert not trivial_braid_necessary(parse_braid("2: 1"))
        found = 0
        while found < 10:
            w = random_word(rng, 4, rng.randint(1, 8))
            if is_pure(w):
                continue
            assert not trivial_braid_necessary(w), w
            found += 1
