"""The integer nonlinearity polynomial of a Boolean function.

For ``f`` on ``n`` variables the polynomial lives in ``Z[a_0, ..., a_n]`` and
its value at a Boolean point ``(a_0, ..., a_n)`` is the Hamming distance from
``f`` to the affine function ``a_0 + a_1 x_1 + ... + a_n x_n``. Coefficient
and evaluation vectors have ``2**(n+1)`` entries; index bit ``2**n`` is
``a_0`` and the low ``n`` bits follow the point-index convention for
``a_1..a_n``.

Three constructors are provided and cross-checked in the tests: the butterfly
(the fast path), the closed coefficient formula, and the literal sum of the
numerical normal forms of ``f(p) + a_0 + sum_{x_j(p)=1} a_j`` over all points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from boolnl.bfcore import AffineCoeffs, TruthTable, index_to_coeffs
from boolnl.counters import OpCounters
from boolnl.errors import DimensionError, SizeLimitError
from boolnl.transforms import (
    _ArrayValue,
    _check_backend,
    _frozen_int_array,
    _halves,
    nnf_butterfly,
    zeta_butterfly,
)

CLOSED_FORM_MAX_N = 16
CLOSED_FORM_NAIVE_MAX_N = 8
NNF_SUM_MAX_N = 8

__all__ = [
    "NlpCoefficients",
    "NlpEvaluations",
    "OpCounters",
    "nlp_butterfly",
    "nlp_closed_form",
    "nlp_evaluate_all",
    "nlp_from_nnf_sum",
    "nonlinearity_nlp",
]


@dataclass(frozen=True, eq=False)
class NlpCoefficients(_ArrayValue):
    n: int
    coeffs: np.ndarray
    _field = "coeffs"

    def __post_init__(self):
        coeffs = _frozen_int_array(self.coeffs)
        if coeffs.shape != (2 << self.n,):
            raise DimensionError(f"expected {2 << self.n} coefficients, got {coeffs.shape}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_vars(self) -> int:
        return self.n


@dataclass(frozen=True, eq=False)
class NlpEvaluations(_ArrayValue):
    """``values[e]`` is the distance from f to the affine function with index ``e``."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        values = _frozen_int_array(self.values)
        if values.shape != (2 << self.n,):
            raise DimensionError(f"expected {2 << self.n} values, got {values.shape}")
        object.__setattr__(self, "values", values)

    @property
    def n_vars(self) -> int:
        return self.n

    def argmin(self) -> tuple[int, set[AffineCoeffs]]:
        best = int(self.values.min())
        hits = np.flatnonzero(self.values == best).tolist()
        return best, {index_to_coeffs(e, self.n) for e in hits}


def _butterfly_numpy(bits: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    c = np.zeros(2 * size, dtype=np.int64)
    c[:size] = bits
    low = c[:size]
    for i in range(n):
        lo, hi = _halves(low, i)
        lo += hi
        hi *= -2
        hi[..., 0] += 1 << i
    c[size] = size - 2 * c[0]
    c[size + 1 :] = -2 * c[1:size]
    return c


def _butterfly_python(bits: list[int], n: int) -> list[int]:
    size = 1 << n
    c = bits + [0] * size
    for i in range(n):
        h = 1 << i
        b = 0
        while b != size:
            for x in range(b, b + h):
                c[x] += c[x + h]
                if x == b:
                    c[x + h] = h - 2 * c[x + h]
                else:
                    c[x + h] = -2 * c[x + h]
            b += 2 * h
    c[size] = size - 2 * c[0]
    for i in range(1, size):
        c[i + size] = -2 * c[i]
    return c


def nlp_butterfly(
    tt: TruthTable, counters: OpCounters | None = None, backend: str = "numpy"
) -> NlpCoefficients:
    """Coefficients of the nonlinearity polynomial in ``O(n 2**n)`` integer operations.

    Level ``i`` folds each high half onto the low half (``c[x] += c[x + 2**i]``)
    and rewrites the high entry as ``-2 c`` (``2**i - 2 c`` at the block head).
    A last pass derives the ``a_0`` monomials from the rest. The ``python``
    backend runs the scalar loop as written; ``numpy`` vectorises each level.
    Both perform ``n 2**(n-1)`` sums and ``n 2**(n-1) + 2**n`` doublings.
    """
    _check_backend(backend)
    n = tt.n
    if backend == "python":
        coeffs = _butterfly_python(tt.bits.tolist(), n)
    else:
        coeffs = _butterfly_numpy(tt.bits, n)
    if counters is not None:
        half = (1 << n) >> 1
        counters.sums += n * half
        counters.doublings += n * half + (1 << n)
    return NlpCoefficients(n, coeffs)


def nlp_closed_form(tt: TruthTable, naive: bool = False) -> NlpCoefficients:
    """Coefficients from the explicit formula.

    ``c_0`` is the weight of f. For ``v = (v_0, w) != 0`` with ``S`` the sum of
    ``f(u)`` over ``u >= w`` and ``T`` the number of such ``u``,
    ``c_v = (-2)**|v| (S - T/2) = (-1)**|v| 2**(|v|-1) (2S - T)``.
    Superset sums come from a butterfly unless ``naive`` is set, in which
    case every ``S`` is summed directly (``4**n`` work, ``n <= 8``).
    """
    n = tt.n
    if n > CLOSED_FORM_MAX_N or (naive and n > CLOSED_FORM_NAIVE_MAX_N):
        limit = CLOSED_FORM_NAIVE_MAX_N if naive else CLOSED_FORM_MAX_N
        raise SizeLimitError(f"closed form limited to n <= {limit}, got n={n}")
    size = 1 << n
    if naive:
        bits = tt.bits.tolist()
        sup = np.array(
            [sum(bits[u] for u in range(size) if u & w == w) for w in range(size)],
            dtype=np.int64,
        )
    else:
        sup = tt.bits.astype(np.int64)
        for i in range(n):
            lo, hi = _halves(sup, i)
            lo += hi
    idx = np.arange(size, dtype=np.int64)
    low_w = np.bitwise_count(idx).astype(np.int64)
    twice_excess = 2 * sup - (size >> low_w)

    coeffs = np.empty(2 * size, dtype=np.int64)
    for v0 in (0, 1):
        w = low_w + v0
        sign = 1 - 2 * (w & 1)
        # 2**(w-1) is only fractional at v == 0, which is overwritten below
        scale = np.left_shift(1, np.maximum(w - 1, 0))
        coeffs[v0 * size : (v0 + 1) * size] = sign * scale * twice_excess
    coeffs[0] = int(tt.bits.sum())
    return NlpCoefficients(n, coeffs)


def nlp_from_nnf_sum(tt: TruthTable) -> NlpCoefficients:
    """Sum over all points ``p`` of NNF(``f(p) + a_0 + sum_{x_j(p)=1} a_j``)."""
    n = tt.n
    if n > NNF_SUM_MAX_N:
        raise SizeLimitError(f"NNF-sum construction limited to n <= {NNF_SUM_MAX_N}, got n={n}")
    size = 1 << n
    a_points = np.arange(2 * size, dtype=np.int64)
    # the affine form at point p reads bit 2**n (a_0) plus the bits of p
    masks = size | np.arange(size, dtype=np.int64)
    tables = (np.bitwise_count(a_points[None, :] & masks[:, None]) & 1).astype(np.int64)
    tables ^= tt.bits.astype(np.int64)[:, None]
    return NlpCoefficients(n, nnf_butterfly(tables).sum(axis=0))


def _zeta_python(coeffs: list[int]) -> list[int]:
    v = list(coeffs)
    size = len(v)
    h = 1
    while h < size:
        for b in range(0, size, 2 * h):
            for x in range(b, b + h):
                v[x + h] += v[x]
        h *= 2
    return v


def nlp_evaluate_all(
    c: NlpCoefficients, counters: OpCounters | None = None, backend: str = "numpy"
) -> NlpEvaluations:
    """Evaluate at all ``2**(n+1)`` Boolean points via subset sums, ``(n+1) 2**n`` additions."""
    _check_backend(backend)
    if backend == "python":
        values = _zeta_python(c.tolist())
        if counters is not None:
            counters.sums += (c.n + 1) << c.n
        return NlpEvaluations(c.n, values)
    return NlpEvaluations(c.n, zeta_butterfly(c.coeffs, counters))


def nonlinearity_nlp(tt: TruthTable, backend: str = "numpy") -> tuple[int, set[AffineCoeffs]]:
    """Nonlinearity and all closest affine functions, as coefficient tuples."""
    evals = nlp_evaluate_all(nlp_butterfly(tt, backend=backend), backend=backend)
    return evals.argmin()
