import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from boolnl.bfcore import (
    TruthTable,
    affine_tt,
    brute_force_nonlinearity,
    distance,
    index_to_coeffs,
    weight,
)
from boolnl.counters import OpCounters
from boolnl.errors import SizeLimitError
from boolnl.nlp import (
    NlpCoefficients,
    _butterfly_python,
    nlp_butterfly,
    nlp_closed_form,
    nlp_evaluate_all,
    nlp_from_nnf_sum,
    nonlinearity_nlp,
)
from boolnl.transforms import nnf_from_tt_direct, walsh_spectrum

from conftest import EX3_CLOSEST, all_functions, random_suite, tt_of
from strategies import truth_tables


def distance_vector(tt):
    """Brute-force distances to every affine function, in evaluation-index order."""
    return [distance(tt, affine_tt(index_to_coeffs(e, tt.n), tt.n)) for e in range(2 << tt.n)]


class TestButterflyExamples:
    @pytest.mark.parametrize(
        "bits, expected",
        [
            ("00", [0, 1, 2, -2]),
            ("01", [1, -1, 0, 2]),
            ("00000001", [1, 2, 2, 0, 2, 0, 0, -4, 6, -4, -4, 0, -4, 0, 0, 8]),
        ],
    )
    def test_frozen_values(self, bits, expected):
        tt = tt_of(bits)
        # the expected vectors are the NNF of the brute-force distance vector
        assert nnf_from_tt_direct(distance_vector(tt)).tolist() == expected
        assert nlp_butterfly(tt).tolist() == expected
        assert nlp_butterfly(tt, backend="python").tolist() == expected

    def test_symbolic_n3_butterfly(self):
        e = sympy.symbols("e1:9")
        c = _butterfly_python(list(e), 3)
        e1, e2, e3, e4, e5, e6, e7, e8 = e
        final = [
            e1 + e2 + e3 + e4 + e5 + e6 + e7 + e8,
            4 - 2 * e2 - 2 * e4 - 2 * e6 - 2 * e8,
            4 - 2 * e3 - 2 * e4 - 2 * e7 - 2 * e8,
            -4 + 4 * e4 + 4 * e8,
            4 - 2 * e5 - 2 * e6 - 2 * e7 - 2 * e8,
            -4 + 4 * e6 + 4 * e8,
            -4 + 4 * e7 + 4 * e8,
            4 - 8 * e8,
        ]
        for got, want in zip(c[:8], final):
            assert sympy.expand(got - want) == 0
        # a_0 monomials
        assert sympy.expand(c[8] - (8 - 2 * final[0])) == 0
        for i in range(1, 8):
            assert sympy.expand(c[8 + i] + 2 * final[i]) == 0

    def test_e8_enters_degree_two_terms_positively(self):
        # the x1x2, x1x3, x2x3 coefficients are -4 + 4 e_i + 4 e8; with only
        # e8 = 1 they vanish, whereas a -4 e8 term would leave -8
        tt = tt_of("00000001")
        c = nlp_closed_form(tt).tolist()
        assert c[3] == c[5] == c[6] == 0
        assert nlp_butterfly(tt).tolist()[:8] == c[:8]

    def test_position_of_last_variable(self):
        # index 1 holds the a_n coefficient: (-2) * sum_{x_n = 1} (f - 1/2)
        for tt in random_suite(4, 20):
            expected = -2 * sum(tt[u] for u in range(16) if u & 1) + 8
            assert nlp_butterfly(tt).coeffs[1] == expected


class TestClosedForm:
    def test_constant_term_is_weight(self):
        for tt in random_suite(6, 20):
            assert nlp_closed_form(tt).coeffs[0] == weight(tt)

    def test_examples(self):
        assert nlp_closed_form(tt_of("00")).coeffs[3] == -2
        assert nlp_closed_form(tt_of("00000001")).coeffs[0b011] == 0

    @pytest.mark.parametrize("n", range(0, 7))
    def test_naive_matches_accelerated(self, n):
        for tt in random_suite(n, 20):
            assert nlp_closed_form(tt, naive=True) == nlp_closed_form(tt)

    def test_size_limits(self):
        with pytest.raises(SizeLimitError):
            nlp_closed_form(TruthTable.from_int(0, 9), naive=True)
        with pytest.raises(SizeLimitError):
            nlp_closed_form(TruthTable.from_int(0, 17))


class TestNnfSum:
    def test_examples(self):
        assert nlp_from_nnf_sum(tt_of("00")).tolist() == [0, 1, 2, -2]
        assert nlp_from_nnf_sum(tt_of("01")).tolist() == [1, -1, 0, 2]

    @pytest.mark.parametrize("n", range(0, 6))
    def test_zero_function_gives_affine_weights(self, n):
        zero = TruthTable.from_int(0, n)
        values = nlp_evaluate_all(nlp_from_nnf_sum(zero)).values
        for e in range(2 << n):
            assert values[e] == weight(affine_tt(index_to_coeffs(e, n), n))

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            nlp_from_nnf_sum(TruthTable.from_int(0, 9))


class TestEvaluate:
    def test_examples(self):
        assert nlp_evaluate_all(NlpCoefficients(1, [1, -1, 0, 2])).tolist() == [1, 0, 1, 2]
        assert nlp_evaluate_all(NlpCoefficients(1, [0, 1, 2, -2])).tolist() == [0, 1, 2, 1]
        assert nlp_evaluate_all(NlpCoefficients(2, [0] * 8)).tolist() == [0] * 8

    @given(truth_tables(max_n=9))
    def test_backends_and_counts(self, tt):
        c = nlp_butterfly(tt)
        k1, k2 = OpCounters(), OpCounters()
        assert nlp_evaluate_all(c, k1) == nlp_evaluate_all(c, k2, backend="python")
        assert k1 == k2 == OpCounters(sums=(tt.n + 1) << tt.n)


class TestNonlinearityNlp:
    def test_worked_examples(self, ex3, ex5):
        assert nonlinearity_nlp(ex3) == (2, EX3_CLOSEST)
        assert nonlinearity_nlp(ex5) == (4, {(0, 0, 0, 0, 0, 0)})

    def test_affine_inputs(self):
        for n in range(5):
            for e in range(2 << n):
                c = index_to_coeffs(e, n)
                assert nonlinearity_nlp(affine_tt(c, n)) == (0, {c})

    def test_python_backend(self, ex3):
        assert nonlinearity_nlp(ex3, backend="python") == (2, EX3_CLOSEST)


class TestInvariants:
    def test_exhaustive_small(self):
        for n in range(4):
            for tt in all_functions(n):
                c = nlp_butterfly(tt)
                assert c == nlp_closed_form(tt) == nlp_from_nnf_sum(tt)
                assert nlp_evaluate_all(c).tolist() == distance_vector(tt)
                assert nonlinearity_nlp(tt) == brute_force_nonlinearity(tt)

    @settings(max_examples=60)
    @given(truth_tables(max_n=10))
    def test_polynomial_properties(self, tt):
        n, size = tt.n, 1 << tt.n
        c = nlp_butterfly(tt)
        values = nlp_evaluate_all(c).values
        assert np.all(np.abs(c.coeffs) <= size)
        assert c.coeffs[0] == weight(tt)
        assert np.all((values >= 0) & (values <= size))
        assert np.array_equal(values[:size] + values[size:], np.full(size, size))
        assert int(values.sum()) == size * size
        w = walsh_spectrum(tt).values
        assert np.array_equal(2 * values[:size], size - w)

    @settings(max_examples=40)
    @given(truth_tables(max_n=8))
    def test_distance_semantics(self, tt):
        assert nlp_evaluate_all(nlp_butterfly(tt)).tolist() == distance_vector(tt)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_operation_counts(self, n):
        tt = random_suite(n, 1)[0]
        half = (1 << n) >> 1
        expected = OpCounters(sums=n * half, doublings=n * half + (1 << n))
        for backend in ("numpy", "python"):
            ops = OpCounters()
            nlp_butterfly(tt, ops, backend)
            assert ops == expected

    @given(truth_tables(max_n=9))
    def test_backends_agree(self, tt):
        assert nlp_butterfly(tt) == nlp_butterfly(tt, backend="python")
