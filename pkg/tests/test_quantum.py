import pytest
from hypothesis import given, settings, strategies as st

from braidrep.braids import BraidWord, invert, parse_braid, reflect
from braidrep.burau import alexander_via_minor, burau
from braidrep.errors import ShapeError, ValidationError
from braidrep.multiindex import MultiIndex, subsets
from braidrep.quantum import (
    alternating_diagonal_sum,
    qhat,
    qhat_determinant,
    qhat_markov_check,
    qhat_state_sum,
    stabilize,
    super_trace,
    wedge_entry_minor,
    wedge_rep,
    wedge_rep_composed,
)
from braidrep.ring import Q, LaurentPoly, RingMatrix

from conftest import T, braid_words

t = T(0, 1)
q = LaurentPoly.var("q", Q)
ONE = LaurentPoly.one(Q)
ZERO = LaurentPoly.zero(Q)
E = MultiIndex(2, ())


def mi(n, *elems):
    return MultiIndex(n, elems)


class TestWedge:
    def test_entry_examples(self):
        s1 = parse_braid("2: 1")
        assert wedge_entry_minor(s1, E, E) == ONE
        assert wedge_entry_minor(s1, mi(2, 1, 2), mi(2, 1, 2)) == -t
        assert wedge_entry_minor(parse_braid("2: 1 1 1"), mi(2, 2), mi(2, 2)) == t - t * t

    def test_entry_convention_matches_burau(self):
        # coefficient of w_k in the image of w_j is burau[k, j]
        m = burau(parse_braid("2: 1"))
        assert wedge_entry_minor(parse_braid("2: 1"), mi(2, 1), mi(2, 2)) == m.entry(2, 1) == t

    def test_entry_size_mismatch(self):
        with pytest.raises(ShapeError):
            wedge_entry_minor(parse_braid("2: 1"), mi(2, 1), E)

    def test_rep_examples(self):
        assert wedge_rep(BraidWord(2)).matrix == RingMatrix.identity(4, Q)
        w = wedge_rep(parse_braid("2: 1"))
        expected = RingMatrix(
            [
                [ONE, ZERO, ZERO, ZERO],
                [ZERO, 1 - t, ONE, ZERO],
                [ZERO, t, ZERO, ZERO],
                [ZERO, ZERO, ZERO, -t],
            ]
        )
        assert [tuple(b) for b in w.basis] == [(), (1,), (2,), (1, 2)]
        assert w.matrix == expected
        sq = wedge_rep(parse_braid("2: 1 1"))
        assert sq.matrix == w.matrix @ w.matrix

    def test_bound(self):
        with pytest.raises(ValidationError):
            wedge_rep(BraidWord(5), bound=4)

    @settings(deadline=None, max_examples=25)
    @given(braid_words(max_n=4, max_len=8))
    def test_routes_agree_and_degree_is_preserved(self, w):
        wm = wedge_rep(w)
        assert wm == wedge_rep_composed(w)
        for a, ja in enumerate(wm.basis):
            for b, jb in enumerate(wm.basis):
                if len(ja) != len(jb):
                    assert wm.matrix[a, b].is_zero()
        assert wm.entry(MultiIndex(w.n, ()), MultiIndex(w.n, ())) == ONE

    @settings(deadline=None, max_examples=25)
    @given(braid_words(max_n=4, max_len=10))
    def test_exterior_trace_identity(self, w):
        total = alternating_diagonal_sum(w)
        assert total == (RingMatrix.identity(w.n, Q) - burau(w)).det()
        assert total.is_zero()


class TestSuperTrace:
    def test_examples(self):
        assert super_trace(BraidWord(2)).is_zero()
        cube = parse_braid("2: 1 1 1")
        # 1 - (1 - t + t^2 - t^3) - (t - t^2) + (-t)^3 = 0
        hand = ONE - T(1, -1, 1, -1) - T(0, 1, -1) + T(0, 0, 0, -1)
        assert hand.is_zero()
        assert super_trace(cube).is_zero()

    @given(braid_words(min_n=1, max_n=4, max_len=10))
    def test_always_zero(self, w):
        assert super_trace(w).is_zero()


class TestQhat:
    def test_unknot(self):
        assert qhat(BraidWord(1)) == ONE

    def test_trefoil_is_symmetrized(self):
        value = qhat(parse_braid("2: 1 1 1"))
        assert value == t.inverse() - 1 + t
        assert value.equal_up_to_unit(alexander_via_minor(parse_braid("2: 1 1 1")), "q")

    def test_hopf(self):
        value = qhat(parse_braid("2: 1 1"))
        assert value == q.inverse() - q
        assert value.equal_up_to_unit(t - 1, "q")

    def test_figure_eight(self):
        value = qhat(parse_braid("3: 1 -2 1 -2"))
        assert value.equal_up_to_unit(T(1, -3, 1), "q")

    def test_unlinks_vanish(self):
        assert qhat(BraidWord(2)).is_zero()
        assert qhat(BraidWord(3)).is_zero()

    @settings(deadline=None, max_examples=40)
    @given(braid_words(min_n=1, max_n=5, max_len=10))
    def test_routes_agree_exactly(self, w):
        assert qhat_state_sum(w) == qhat_determinant(w)

    @settings(deadline=None, max_examples=40)
    @given(braid_words(max_n=5, max_len=10))
    def test_matches_alexander_minor(self, w):
        assert qhat(w).canonical_unit_form("q") == alexander_via_minor(w)

    @settings(deadline=None, max_examples=30)
    @given(braid_words(max_n=5, max_len=10))
    def test_reflection_preserves_closure_invariant(self, w):
        assert qhat(reflect(w)).equal_up_to_unit(qhat(w), "q")


class TestMarkov:
    def test_stabilization_example(self):
        before = qhat(parse_braid("2: 1 1 1"))
        after = qhat(parse_braid("3: 1 1 1 2"))
        assert stabilize(parse_braid("2: 1 1 1"), 1) == parse_braid("3: 1 1 1 2")
        assert before.equal_up_to_unit(after, "q")

    @given(braid_words(max_n=4, max_len=8), st.data())
    def test_conjugation(self, w, data):
        u = data.draw(braid_words(min_n=w.n, max_n=w.n, max_len=4))
        assert qhat(u * w * invert(u)).equal_up_to_unit(qhat(w), "q")

    def test_unlinks(self):
        assert qhat(BraidWord(2)).is_zero() and qhat(BraidWord(3)).is_zero()

    def test_report(self):
        report = qhat_markov_check(parse_braid("3: 1 -2 1 -2"), 15, seed=7)
        assert report.ok
        obj = report.to_json_obj()
        assert obj == {"trials": 15, "failures": []}
        again = qhat_markov_check(parse_braid("3: 1 -2 1 -2"), 15, seed=7)
        assert again.moves == report.moves

    def test_unknown_move_kind(self):
        with pytest.raises(ValidationError):
            qhat_markov_check(BraidWord(2), 1, 0, moves="flype")
