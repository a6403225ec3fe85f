"""Butterfly transforms over the Boolean hypercube.

All butterflies walk bit levels from the least significant upwards. At level
``i`` the vector is viewed as blocks of ``2**(i+1)`` entries; the low half of
each block pairs with the high half. The numpy kernels operate on the last
axis, so a 2-D array transforms many vectors at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from boolnl.bfcore import AffineCoeffs, AnfForm, TruthTable, index_to_coeffs, var_mask
from boolnl.counters import OpCounters
from boolnl.errors import DimensionError, SizeLimitError

NNF_DIRECT_MAX_M = 12
BACKENDS = ("numpy", "python")


def _log2_len(size: int) -> int:
    if size == 0 or size & (size - 1):
        raise DimensionError(f"length {size} is not a power of two")
    return size.bit_length() - 1


def _halves(arr: np.ndarray, level: int) -> tuple[np.ndarray, np.ndarray]:
    h = 1 << level
    v = arr.reshape(arr.shape[:-1] + (-1, 2, h))
    return v[..., 0, :], v[..., 1, :]


def _check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")


class _ArrayValue:
    """Equality and hashing for small frozen containers holding one int64 vector."""

    _field = "values"

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.n_vars == other.n_vars and np.array_equal(
            getattr(self, self._field), getattr(other, other._field)
        )

    def __hash__(self):
        return hash((self.n_vars, getattr(self, self._field).tobytes()))

    def tolist(self) -> list[int]:
        return [int(v) for v in getattr(self, self._field)]


def _frozen_int_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64)
    arr.flags.writeable = False
    return arr


# -- Moebius (ANF) ----------------------------------------------------------


def mobius_vector(bits: np.ndarray) -> np.ndarray:
    """XOR butterfly over GF(2); an involution on 0/1 vectors of length ``2**n``."""
    out = np.array(bits, dtype=np.uint8)
    for i in range(_log2_len(out.shape[-1])):
        lo, hi = _halves(out, i)
        hi ^= lo
    return out


def mobius(tt: TruthTable) -> AnfForm:
    """ANF of ``tt``; coefficient index follows the point-index convention."""
    coeffs = mobius_vector(tt.bits)
    n = tt.n
    mons = [
        frozenset(j for j in range(1, n + 1) if u & var_mask(j, n))
        for u in np.flatnonzero(coeffs).tolist()
    ]
    return AnfForm(n, frozenset(mons))


def anf_vector(anf: AnfForm) -> np.ndarray:
    vec = np.zeros(1 << anf.n, dtype=np.uint8)
    for m in anf.monomials:
        vec[sum(var_mask(j, anf.n) for j in m)] = 1
    return vec


def mobius_inverse(anf: AnfForm) -> TruthTable:
    """Fast route from ANF back to the truth table."""
    return TruthTable(anf.n, mobius_vector(anf_vector(anf)))


def algebraic_degree(tt: TruthTable) -> int:
    """Degree of the ANF; -1 for the zero function."""
    return mobius(tt).degree()


# -- Walsh ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class WalshSpectrum(_ArrayValue):
    """``values[a] = sum_u (-1)**(f(u) ^ a.u)``."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_int_array(self.values))

    @property
    def n_vars(self) -> int:
        return self.n


def _fwt_numpy(signs: np.ndarray, counters: OpCounters | None) -> np.ndarray:
    w = signs.astype(np.int64)
    for i in range(_log2_len(w.shape[-1])):
        lo, hi = _halves(w, i)
        s = lo + hi
        hi[...] = lo - hi
        lo[...] = s
        if counters is not None:
            counters.sums += 2 * (w.shape[-1] >> 1)
    return w


def _fwt_python(bits: Sequence[int], counters: OpCounters | None) -> list[int]:
    w = [1 - 2 * b for b in bits]
    size = len(w)
    h = 1
    while h < size:
        for b in range(0, size, 2 * h):
            for x in range(b, b + h):
                u, v = w[x], w[x + h]
                w[x] = u + v
                w[x + h] = u - v
        if counters is not None:
            counters.sums += size
        h *= 2
    return w


def walsh_spectrum(
    tt: TruthTable, counters: OpCounters | None = None, backend: str = "numpy"
) -> WalshSpectrum:
    _check_backend(backend)
    if backend == "python":
        return WalshSpectrum(tt.n, _fwt_python(tt.bits.tolist(), counters))
    signs = 1 - 2 * tt.bits.astype(np.int64)
    return WalshSpectrum(tt.n, _fwt_numpy(signs, counters))


def nonlinearity_from_spectrum(spec: WalshSpectrum) -> int:
    return ((1 << spec.n) - int(np.abs(spec.values).max())) >> 1


def nonlinearity_fwt(
    tt: TruthTable, counters: OpCounters | None = None, backend: str = "numpy"
) -> int:
    """``2**(n-1) - max|W_f| / 2``."""
    spec = walsh_spectrum(tt, counters, backend)
    if backend == "python":
        return ((1 << tt.n) - max(map(abs, spec.tolist()))) >> 1
    return nonlinearity_from_spectrum(spec)


def closest_affine_fwt(tt: TruthTable) -> set[AffineCoeffs]:
    """Affine functions at minimum distance, read off the extreme Walsh values.

    A positive extreme ``W(a)`` means the linear function ``a.x`` is closest,
    a negative one means its complement is.
    """
    n = tt.n
    w = walsh_spectrum(tt).values
    peak = int(np.abs(w).max())
    out = set()
    for a in np.flatnonzero(np.abs(w) == peak).tolist():
        a0 = 0 if w[a] > 0 else 1
        out.add(index_to_coeffs((a0 << n) | a, n))
    return out


# -- Numerical normal form --------------------------------------------------


@dataclass(frozen=True, eq=False)
class IntegerPolynomial(_ArrayValue):
    """Multilinear integer polynomial in ``m`` variables.

    ``coeffs[u]`` multiplies the product of the variables whose bits are set in
    ``u`` (variable ``j`` at significance ``2**(m-j)``).
    """

    m: int
    coeffs: np.ndarray
    _field = "coeffs"

    def __post_init__(self):
        coeffs = _frozen_int_array(self.coeffs)
        if coeffs.shape != (1 << self.m,):
            raise DimensionError(f"expected {1 << self.m} coefficients, got {coeffs.shape}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n_vars(self) -> int:
        return self.m


def nnf_butterfly(values: np.ndarray) -> np.ndarray:
    """Signed Moebius transform along the last axis: ``hi -= lo`` per level."""
    out = np.array(values, dtype=np.int64)
    for i in range(_log2_len(out.shape[-1])):
        lo, hi = _halves(out, i)
        hi -= lo
    return out


def zeta_butterfly(coeffs: np.ndarray, counters: OpCounters | None = None) -> np.ndarray:
    """Subset-sum transform along the last axis: ``hi += lo`` per level."""
    out = np.array(coeffs, dtype=np.int64)
    for i in range(_log2_len(out.shape[-1])):
        lo, hi = _halves(out, i)
        hi += lo
        if counters is not None:
            counters.sums += out.shape[-1] >> 1
    return out


def nnf_from_tt(values: Sequence[int] | np.ndarray) -> IntegerPolynomial:
    """NNF coefficients of an integer-valued function given on all ``2**m`` points."""
    arr = np.asarray(values, dtype=np.int64)
    m = _log2_len(arr.size)
    return IntegerPolynomial(m, nnf_butterfly(arr))


def nnf_from_tt_direct(values: Sequence[int] | np.ndarray) -> IntegerPolynomial:
    """Same result as :func:`nnf_from_tt` by summing over every submask (``3**m`` terms)."""
    vals = [int(v) for v in np.asarray(values, dtype=np.int64)]
    m = _log2_len(len(vals))
    if m > NNF_DIRECT_MAX_M:
        raise SizeLimitError(f"direct NNF limited to m <= {NNF_DIRECT_MAX_M}, got m={m}")
    coeffs = []
    for u in range(1 << m):
        total = 0
        a = u
        while True:
            total += -vals[a] if a.bit_count() & 1 else vals[a]
            if a == 0:
                break
            a = (a - 1) & u
        coeffs.append(-total if u.bit_count() & 1 else total)
    return IntegerPolynomial(m, coeffs)


def nnf_evaluate(p: IntegerPolynomial) -> np.ndarray:
    """Values of ``p`` at every Boolean point: ``f(u) = sum_{a <= u} lambda_a``."""
    return zeta_butterfly(p.coeffs)
