import itertools
import math
import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolnl.bfcore import TruthTable, affine_tt, brute_force_nonlinearity, distance, index_to_coeffs
from boolnl.errors import SizeLimitError
from boolnl.ideal import (
    FqVector,
    IdealGenerators,
    PolyF2,
    closest_affine_ideal,
    compose_monomial,
    elementary_symmetric_eval,
    gn_vector,
    is_prime,
    jtn_generators,
    monomial_variety,
    nonlinearity_ideal,
    square_free_monomials,
    symmetric_variety,
    variety_nonempty_lazy,
    variety_points,
    variety_witnesses,
    weight_ball,
)

from conftest import all_functions, random_suite, tt_of

a0, a1, a2 = PolyF2.var(0), PolyF2.var(1), PolyF2.var(2)
ONE = PolyF2.one()

polys = st.frozensets(st.integers(0, 15), max_size=10).map(PolyF2.from_monomials)


class TestSquareFreeMonomials:
    def test_examples(self):
        assert list(square_free_monomials(3, 2)) == [(1, 2), (1, 3), (2, 3)]
        assert list(square_free_monomials(5, 5)) == [(1, 2, 3, 4, 5)]
        assert list(square_free_monomials(4, 1)) == [(1,), (2,), (3,), (4,)]

    def test_lazy(self):
        gen = square_free_monomials(64, 32)
        assert not isinstance(gen, (list, tuple))
        assert next(iter(gen)) == tuple(range(1, 33))

    @pytest.mark.parametrize("s, t", [(3, 0), (3, 4), (65, 2)])
    def test_out_of_range(self, s, t):
        with pytest.raises(ValueError):
            square_free_monomials(s, t)


class TestPolyF2:
    def test_field_equation_reduction(self):
        assert a0 * a0 == a0
        assert (a0 + ONE) * a0 == PolyF2()

    @given(polys, st.integers(0, 15))
    def test_idempotent_at_boolean_points(self, p, point):
        assert (p * p).evaluate(point) == p.evaluate(point)

    @given(polys, polys, st.integers(0, 15))
    def test_ring_homomorphism(self, p, q, point):
        assert (p * q).evaluate(point) == p.evaluate(point) & q.evaluate(point)
        assert (p + q).evaluate(point) == p.evaluate(point) ^ q.evaluate(point)

    @given(polys)
    def test_vector_evaluation_matches_pointwise(self, p):
        values = p.evaluate_all(4)
        for e in range(16):
            mask = sum(((e >> (3 - j)) & 1) << j for j in range(4))
            assert values[e] == p.evaluate(mask)

    def test_render(self):
        assert (a0 + a0 * a1 + ONE).render() == "1+a0+a0*a1"
        assert str(PolyF2()) == "0"


class TestComposeMonomial:
    def test_worked_example(self):
        x1, x2, x3 = (PolyF2.var(j) for j in (1, 2, 3))
        W = [x1 * x2 + x3, x2, x2 * x3]
        assert compose_monomial((1, 3), W) == x1 * x2 * x3 + x2 * x3

    def test_single_factor(self):
        W = [a0, a1 + ONE, a0 * a1]
        assert compose_monomial((2,), W) == W[1]

    def test_reduction(self):
        assert compose_monomial((1, 2), [a0, a0]) == a0

    def test_index_checked(self):
        with pytest.raises(IndexError):
            compose_monomial((1, 3), [a0, a1])


class TestJtn:
    def test_gn_vector(self):
        assert gn_vector(1) == [a0, a0 + a1]
        assert gn_vector(2) == [a0, a0 + a2, a0 + a1, a0 + a1 + a2]
        assert all(1 in g.monomials for g in gn_vector(4))

    def test_generators_n1(self):
        f = tt_of("01")
        assert set(jtn_generators(f, 2).gens) == {a0 * a1}
        assert set(jtn_generators(f, 1).gens) == {a0, a0 + a1 + ONE}

    def test_full_product(self):
        f = tt_of("0110")
        gens = jtn_generators(f, 4).gens
        W = [g + ONE if b else g for g, b in zip(gn_vector(2), f.bits)]
        assert gens == (W[0] * W[1] * W[2] * W[3],)

    def test_guard(self):
        assert math.comb(32, 8) > 10**6
        with pytest.raises(SizeLimitError):
            jtn_generators(TruthTable.from_int(0, 5), 8)

    def test_variety_points(self):
        assert variety_points(IdealGenerators(2, (a0, a0 + a1 + ONE))) == {(0, 1)}
        assert variety_points(IdealGenerators(2, (ONE,))) == set()
        assert variety_points(IdealGenerators(3, ())) == set(itertools.product((0, 1), repeat=3))

    def test_generator_variables_checked(self):
        with pytest.raises(ValueError):
            IdealGenerators(2, (a2,))


class TestLazyVariety:
    def test_worked_example_n3(self, ex3):
        assert variety_nonempty_lazy(ex3, 2) is None
        witness = variety_nonempty_lazy(ex3, 3)
        assert distance(ex3, affine_tt(witness, 3)) <= 2

    def test_worked_example_n5(self, ex5):
        for t in (2, 3, 4):
            assert variety_nonempty_lazy(ex5, t) is None
        assert variety_nonempty_lazy(ex5, 5) == (0, 0, 0, 0, 0, 0)
        assert variety_witnesses(ex5, 5) == {(0, 0, 0, 0, 0, 0)}

    def test_first_witness_in_ascending_order(self):
        # only the zero affine function is at distance 0 from the zero function
        assert variety_nonempty_lazy(TruthTable.from_int(0, 3), 1) == (0, 0, 0, 0)

    def test_materialized_agrees(self, ex3):
        for t in (1, 2, 3, 4):
            assert variety_points(jtn_generators(ex3, t)) == variety_witnesses(ex3, t)

    def test_variety_criterion_exhaustive(self):
        for n in range(4):
            for tt in all_functions(n):
                nl = brute_force_nonlinearity(tt)[0]
                for t in range(1, (1 << n) + 1):
                    assert (variety_nonempty_lazy(tt, t) is not None) == (nl <= t - 1)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            variety_nonempty_lazy(TruthTable.from_int(0, 17), 3)


class TestNonlinearityIdeal:
    def test_worked_examples(self, ex3, ex5):
        assert nonlinearity_ideal(ex3) == 2
        assert nonlinearity_ideal(ex5) == 4
        assert closest_affine_ideal(ex5) == {(0, 0, 0, 0, 0, 0)}

    def test_affine(self):
        for e in range(16):
            assert nonlinearity_ideal(affine_tt(index_to_coeffs(e, 3), 3)) == 0

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_random(self, n):
        for tt in random_suite(n, 30):
            assert (nonlinearity_ideal(tt), closest_affine_ideal(tt)) == brute_force_nonlinearity(tt)


class TestSymmetric:
    def test_elementary_examples(self):
        assert elementary_symmetric_eval(2, FqVector(2, (1, 1, 0))) == 1
        v = FqVector(3, (2, 1, 2))
        assert elementary_symmetric_eval(3, v) == (2 * 1 * 2) % 3
        assert elementary_symmetric_eval(1, v) == 5 % 3

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_elementary_against_combinations(self, q):
        for v in itertools.product(range(q), repeat=4):
            for i in range(1, 5):
                direct = sum(math.prod(c) for c in itertools.combinations(v, i)) % q
                assert elementary_symmetric_eval(i, FqVector(q, v)) == direct

    def test_fq_vector_validation(self):
        with pytest.raises(ValueError):
            FqVector(4, (0, 1))
        with pytest.raises(ValueError):
            FqVector(3, (0, 3))
        with pytest.raises(ValueError):
            elementary_symmetric_eval(3, FqVector(2, (1, 1)))

    def test_examples(self):
        q1 = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}
        assert symmetric_variety(3, 2, 2) == q1
        assert monomial_variety(3, 2, 2) == q1
        assert symmetric_variety(3, 1, 2) == {(0, 0, 0)}
        assert monomial_variety(3, 1, 2) == {(0, 0, 0)}
        assert symmetric_variety(3, 4, 2) == set(itertools.product((0, 1), repeat=3))
        assert monomial_variety(2, 2, 3) == set(itertools.product(range(3), repeat=2)) - {
            (1, 1), (1, 2), (2, 1), (2, 2)
        }

    @pytest.mark.parametrize("q", [2, 3])
    def test_varieties_are_weight_balls(self, q):
        for s in range(1, 5):
            for t in range(1, s + 1):
                ball = weight_ball(s, t - 1, q)
                assert symmetric_variety(s, t, q) == ball
                assert monomial_variety(s, t, q) == ball

    def test_monomials_do_not_cut_out_the_weight_t_ball(self):
        # degree-t square-free monomials are nonzero at weight-t points
        for s in range(2, 5):
            for t in range(1, s + 1):
                assert monomial_variety(s, t, 2) != weight_ball(s, t, 2)

    def test_limits(self):
        assert not is_prime(1) and is_prime(2) and not is_prime(9)
        with pytest.raises(ValueError):
            symmetric_variety(3, 2, 4)
        with pytest.raises(SizeLimitError):
            monomial_variety(24, 2, 2)
