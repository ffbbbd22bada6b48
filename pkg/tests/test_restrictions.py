import random
from fractions import Fraction

import pytest

from sgharmonic.gasket import BoundaryValues, EdgePoint, edge_profile, eval_dyadic
from sgharmonic.restrictions import (
    DerivClass,
    MonotonicityClass,
    beta_closed_form,
    classify_edge,
    conserved_combination,
    count_zero_junctions,
    dsv_check,
    gamma_closed_form,
    junction_derivative,
    locate_extremum,
    simultaneous_monotone,
    third_point_context,
    third_point_of_subedge,
    third_point_quotients,
    third_point_value,
    triangle_sequence,
)

INC = MonotonicityClass.STRICTLY_INCREASING
DEC = MonotonicityClass.STRICTLY_DECREASING
NON = MonotonicityClass.NON_MONOTONE
CONST = MonotonicityClass.CONSTANT


def rand_triple(rng, bound=100):
    return BoundaryValues(*(Fraction(rng.randint(-bound, bound),
                                     rng.randint(1, bound)) for _ in range(3)))


def rand_nonconstant(rng, bound=100):
    while True:
        bv = rand_triple(rng, bound)
        if not bv.is_constant():
            return bv


class TestClassifyEdge:
    @pytest.mark.parametrize("triple,expected", [
        ((1, 0, 2), INC),
        ((5, 0, 1), NON),
        ((0, 0, 0), CONST),
        ((2, 0, 1), INC),   # boundary case alpha = 2*gamma - beta
        ((1, 2, 0), DEC),
        ((0, 0, 1), INC),
    ])
    def test_examples(self, triple, expected):
        assert classify_edge(BoundaryValues(*triple), "bottom") is expected

    def test_remark2_product_form_agrees(self):
        rng = random.Random(10)
        for _ in range(2000):
            bv = rand_nonconstant(rng)
            a, b, g = bv.as_tuple()
            d = bv.delta
            strict = classify_edge(bv, "bottom") in (INC, DEC)
            assert strict == ((3 * b - d) * (3 * g - d) <= 0)

    def test_mirror_symmetry(self):
        rng = random.Random(11)
        flipped = {INC: DEC, DEC: INC, NON: NON, CONST: CONST}
        for _ in range(500):
            bv = rand_triple(rng)
            mirrored = BoundaryValues(bv.alpha, bv.gamma, bv.beta)
            assert classify_edge(mirrored, "bottom") is flipped[
                classify_edge(bv, "bottom")]


class TestDsvCheck:
    def test_examples(self):
        assert dsv_check(BoundaryValues(1, 0, 2)) is True
        assert dsv_check(BoundaryValues(5, 0, 1)) is False
        assert dsv_check(BoundaryValues(0, 0, 0)) is False

    def test_equivalent_to_inequality_form(self):
        rng = random.Random(12)
        for _ in range(2000):
            bv = rand_triple(rng)
            a, b, g = bv.as_tuple()
            assert dsv_check(bv) == (b < g and 2 * b - g <= a <= 2 * g - b)


class TestSimultaneousMonotone:
    def test_examples(self):
        assert simultaneous_monotone(BoundaryValues(1, 0, 2)) is True
        assert simultaneous_monotone(BoundaryValues(0, 0, 1)) is False
        assert simultaneous_monotone(BoundaryValues(0, 1, 2)) is True

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            simultaneous_monotone(BoundaryValues(1, 1, 1))

    def test_agrees_with_three_edge_classification(self):
        rng = random.Random(13)
        for _ in range(2000):
            bv = rand_nonconstant(rng)
            by_edges = all(classify_edge(bv, e) in (INC, DEC)
                           for e in ("bottom", "left", "right"))
            assert simultaneous_monotone(bv) == by_edges


class TestLocateExtremum:
    def test_depth_one_example(self):
        res = locate_extremum(BoundaryValues(5, 0, 1), "bottom", 1)
        assert (res.kind, res.lo, res.hi) == ("max", Fraction(1, 2), Fraction(1))

    def test_monotone_rejected(self):
        with pytest.raises(ValueError):
            locate_extremum(BoundaryValues(1, 0, 2), "bottom", 3)

    def test_bracket_halves_and_nests(self):
        bv = BoundaryValues(5, 0, 1)
        prev = None
        for depth in range(1, 9):
            res = locate_extremum(bv, "bottom", depth)
            if res.junction is not None:
                assert res.lo == res.hi == res.junction
                break
            assert res.hi - res.lo == Fraction(1, 2 ** depth)
            if prev is not None:
                assert prev.lo <= res.lo and res.hi <= prev.hi
            prev = res

    def test_sampling_confirms_bracket(self):
        bv = BoundaryValues(5, 0, 1)
        res = locate_extremum(bv, "bottom", 4)
        assert res.hi - res.lo == Fraction(1, 16)
        prof = edge_profile(bv, 8)
        n = 256
        before = [v for k, v in enumerate(prof) if Fraction(k, n) <= res.lo]
        after = [v for k, v in enumerate(prof) if Fraction(k, n) >= res.hi]
        assert all(x < y for x, y in zip(before, before[1:]))
        assert all(x > y for x, y in zip(after, after[1:]))

    def test_junction_extremum_symmetric_triple(self):
        # beta == gamma forces the extremum onto the midpoint by symmetry
        res = locate_extremum(BoundaryValues(5, 0, 0), "bottom", 10)
        assert res.junction == Fraction(1, 2)
        assert res.kind == "max"


class TestJunctionDerivative:
    def test_interior_monotone_increasing(self):
        left, right = junction_derivative(
            BoundaryValues(0, 0, 1), "bottom", Fraction(1, 2))
        assert left is DerivClass.PLUS_INFINITY
        assert right is DerivClass.PLUS_INFINITY

    def test_zero_at_left_endpoint(self):
        assert junction_derivative(BoundaryValues(-2, 0, 2), "bottom",
                                   Fraction(0)) == (None, DerivClass.ZERO)

    def test_infinite_at_left_endpoint(self):
        assert junction_derivative(BoundaryValues(1, 0, 2), "bottom",
                                   Fraction(0)) == (None, DerivClass.PLUS_INFINITY)

    def test_right_endpoint_one_sided(self):
        left, right = junction_derivative(
            BoundaryValues(0, 0, 1), "bottom", Fraction(1))
        assert right is None
        assert left is DerivClass.PLUS_INFINITY

    def test_non_dyadic_rejected(self):
        with pytest.raises(ValueError):
            junction_derivative(BoundaryValues(0, 0, 1), "bottom", Fraction(1, 3))

    def test_constant_rejected(self):
        with pytest.raises(ArithmeticError):
            junction_derivative(BoundaryValues(1, 1, 1), "bottom", Fraction(1, 2))

    def test_direction_matches_monotonicity_at_half(self):
        rng = random.Random(14)
        for _ in range(300):
            bv = rand_nonconstant(rng)
            cls = classify_edge(bv, "bottom")
            if cls not in (INC, DEC):
                continue
            want = DerivClass.PLUS_INFINITY if cls is INC else DerivClass.MINUS_INFINITY
            assert junction_derivative(bv, "bottom", Fraction(1, 2)) == (want, want)

    def test_class_depth_invariance(self):
        # evaluating the same junction as k/2^m or 2k/2^(m+1) must agree
        rng = random.Random(15)
        for _ in range(100):
            bv = rand_nonconstant(rng)
            pos = Fraction(3, 8)
            assert junction_derivative(bv, "bottom", pos) == junction_derivative(
                bv, "bottom", Fraction(6, 16))


class TestCountZeroJunctions:
    def test_exception_at_p1(self):
        count, zeros = count_zero_junctions(BoundaryValues(-2, 0, 2), 4)
        assert count == 1
        assert zeros == [("vertex", "p1")]

    def test_no_zeros(self):
        assert count_zero_junctions(BoundaryValues(5, 0, 1), 6) == (0, [])

    def test_symmetric_triple_zero_at_edge_midpoint(self):
        # alpha == beta makes the restriction to [p0, p1] symmetric about its
        # midpoint; the extremum sits there and both one-sided classes vanish
        count, zeros = count_zero_junctions(BoundaryValues(0, 0, 1), 4)
        assert count == 1
        assert zeros == [("left", Fraction(1, 2))]
        left, right = junction_derivative(
            BoundaryValues(0, 0, 1), "left", Fraction(1, 2))
        assert left is DerivClass.ZERO and right is DerivClass.ZERO

    def test_exception_at_p0(self):
        count, zeros = count_zero_junctions(BoundaryValues(1, 0, 2), 4)
        assert count == 1
        assert zeros == [("vertex", "p0")]

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            count_zero_junctions(BoundaryValues(2, 2, 2), 4)

    def test_at_most_one_zero_on_random_triples(self):
        rng = random.Random(16)
        for _ in range(200):
            count, _ = count_zero_junctions(rand_nonconstant(rng), 5)
            assert count <= 1


class TestThirdPoint:
    def test_value_examples(self):
        assert third_point_value(BoundaryValues(0, 0, 1)) == Fraction(7, 27)
        assert third_point_value(BoundaryValues(1, 1, 1)) == 1
        assert third_point_value(BoundaryValues(1, 0, 0)) == Fraction(5, 27)

    def test_triangle_sequence_one_step(self):
        seq = triangle_sequence(BoundaryValues(0, 0, 1), 1)
        assert (seq.alpha_m, seq.beta_m, seq.gamma_m) == (
            Fraction(6, 25), Fraction(1, 5), Fraction(2, 5))
        assert (seq.p1_m, seq.p2_m) == (Fraction(1, 4), Fraction(1, 2))

    def test_triangle_sequence_two_steps(self):
        seq = triangle_sequence(BoundaryValues(0, 0, 1), 2)
        assert (seq.alpha_m, seq.beta_m, seq.gamma_m) == (
            Fraction(161, 625), Fraction(154, 625), Fraction(36, 125))
        assert 5 * seq.alpha_m + 15 * seq.beta_m + 7 * seq.gamma_m == 7

    def test_triangle_sequence_constant(self):
        seq = triangle_sequence(BoundaryValues(1, 1, 1), 7)
        assert (seq.alpha_m, seq.beta_m, seq.gamma_m) == (1, 1, 1)

    def test_corner_values_match_cell_descent(self):
        from sgharmonic.gasket import cell_values
        rng = random.Random(17)
        for _ in range(20):
            bv = rand_triple(rng)
            for m in range(5):
                seq = triangle_sequence(bv, m)
                cell = cell_values(bv, "12" * m)
                assert cell.as_tuple() == (seq.alpha_m, seq.beta_m, seq.gamma_m)

    def test_corner_positions_match_dyadic_eval(self):
        rng = random.Random(18)
        for _ in range(10):
            bv = rand_triple(rng)
            for m in range(1, 6):
                seq = triangle_sequence(bv, m)
                assert seq.p2_m - seq.p1_m == Fraction(1, 4 ** m)
                assert eval_dyadic(bv, EdgePoint("bottom", seq.p1_m)) == seq.beta_m
                assert eval_dyadic(bv, EdgePoint("bottom", seq.p2_m)) == seq.gamma_m

    def test_closed_form_examples(self):
        bv = BoundaryValues(0, 0, 1)
        assert gamma_closed_form(bv, 0) == 1
        assert gamma_closed_form(bv, 2) == Fraction(36, 125)
        assert gamma_closed_form(BoundaryValues(1, 1, 1), 5) == 1

    def test_closed_forms_match_recursion(self):
        rng = random.Random(19)
        for _ in range(15):
            bv = rand_triple(rng)
            for m in range(12):
                seq = triangle_sequence(bv, m)
                assert gamma_closed_form(bv, m) == seq.gamma_m
                assert beta_closed_form(bv, m) == seq.beta_m

    def test_context_invariants(self):
        bv = BoundaryValues(3, -2, 5)
        ctx = third_point_context(bv)
        from sgharmonic.exactarith import QuadExt
        assert ctx.c == conserved_combination(bv)
        assert ctx.s - ctx.h == QuadExt(0, Fraction(1, 25))
        assert ctx.B == ctx.k / (ctx.s - ctx.h)

    def test_quotient_examples(self):
        bv = BoundaryValues(0, 0, 1)
        assert third_point_quotients(bv, 1, "right") == Fraction(38, 45)
        assert third_point_quotients(bv, 2, "right") == Fraction(776, 1125)
        assert third_point_quotients(BoundaryValues(1, 1, 1), 4, "left") == 0

    def test_quotient_geometric_envelope(self):
        # sound form of the decay: |q_right(m)| <= (3/2)(|A|+|B|)(4s)^m and
        # 4s < 9/10 exactly, so the quotients tend to zero geometrically
        # even across transient cancellations of the two terms
        from sgharmonic.exactarith import QuadExt

        def qabs(x):
            return x if x.sign() >= 0 else -x

        rng = random.Random(21)
        for _ in range(30):
            bv = rand_nonconstant(rng)
            ctx = third_point_context(bv)
            four_s = 4 * ctx.s
            assert four_s < QuadExt(Fraction(9, 10))
            right_env = Fraction(3, 2) * (qabs(ctx.A) + qabs(ctx.B))
            C = (ctx.w / (ctx.s - 1) - ctx.v * ctx.B + ctx.t0) / ctx.u
            D = -(ctx.v / QuadExt(ctx.u)) * ctx.A
            left_env = 3 * (qabs(C) + qabs(D))
            for m in range(1, 16):
                qr = abs(third_point_quotients(bv, m, "right"))
                ql = abs(third_point_quotients(bv, m, "left"))
                growth = four_s ** m
                assert QuadExt(qr) <= right_env * growth
                assert QuadExt(ql) <= left_env * growth

    def test_subedge_examples(self):
        bv = BoundaryValues(0, 0, 1)
        assert third_point_of_subedge(bv, "", Fraction(1, 3)) == (
            Fraction(1, 3), Fraction(7, 27))
        assert third_point_of_subedge(bv, "1", Fraction(1, 3)) == (
            Fraction(1, 6), Fraction(19, 135))
        assert third_point_of_subedge(BoundaryValues(1, 1, 1), "2",
                                      Fraction(2, 3)) == (Fraction(5, 6), 1)

    def test_subedge_rejects_apex_words(self):
        with pytest.raises(ValueError):
            third_point_of_subedge(BoundaryValues(0, 0, 1), "10", Fraction(1, 3))

    def test_subedge_quotient_decay_transfers(self):
        # sub-edge third points inherit the zero derivative at every scale
        bv = BoundaryValues(4, -1, 3)
        from sgharmonic.gasket import cell_values
        cell = cell_values(bv, "21")
        pos, val = third_point_of_subedge(bv, "21", Fraction(1, 3))
        assert val == third_point_value(cell)
        assert pos == Fraction(2, 4) + Fraction(1, 3) / 4
