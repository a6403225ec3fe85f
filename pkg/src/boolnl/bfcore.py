"""Boolean functions, affine functions, weights, distances and the brute-force oracle.

Point ordering: index ``p`` in ``[0, 2**n)`` encodes ``(x_1, ..., x_n)`` as a
binary number with ``x_n`` least significant, so ``x_j(p) = (p >> (n - j)) & 1``.
Affine functions ``a_0 + a_1 x_1 + ... + a_n x_n`` are carried around as
coefficient tuples ``(a_0, a_1, ..., a_n)``; their linear part packs into an
integer with the same convention, which makes ``a . p`` a popcount parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from boolnl.errors import DimensionError, SizeLimitError

MAX_N = 24
BRUTE_FORCE_MAX_N = 16

AffineCoeffs = tuple[int, ...]


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise SizeLimitError(f"n={n} outside supported range 0..{MAX_N}")


def var_mask(j: int, n: int) -> int:
    """Bit mask of variable ``x_j`` (1-based) inside a point index."""
    return 1 << (n - j)


@dataclass(frozen=True, eq=False)
class TruthTable:
    """Evaluation vector of a Boolean function on the ``2**n`` canonical points."""

    n: int
    bits: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        if bits.shape != (1 << self.n,):
            raise DimensionError(f"expected {1 << self.n} entries for n={self.n}, got {bits.shape}")
        if bits.size and bits.max() > 1:
            raise ValueError("truth table entries must be 0 or 1")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_bits(cls, bits: Sequence[int] | np.ndarray) -> TruthTable:
        bits = np.asarray(bits, dtype=np.uint8)
        size = bits.size
        if size == 0 or size & (size - 1):
            raise DimensionError(f"truth table length {size} is not a power of two")
        return cls(size.bit_length() - 1, bits)

    @classmethod
    def from_int(cls, value: int, n: int) -> TruthTable:
        """Table whose entry ``p`` is bit ``p`` of ``value``."""
        _check_n(n)
        nbytes = max(1, (1 << n) // 8)
        raw = np.frombuffer(value.to_bytes(nbytes, "little"), dtype=np.uint8)
        return cls(n, np.unpackbits(raw, bitorder="little")[: 1 << n])

    @classmethod
    def from_words(cls, words: Sequence[int] | np.ndarray, n: int) -> TruthTable:
        """Inverse of :meth:`words`."""
        _check_n(n)
        raw = np.asarray(words, dtype="<u8").view(np.uint8)
        bits = np.unpackbits(raw, bitorder="little")
        if bits.size < (1 << n):
            raise DimensionError(f"{len(words)} words cannot hold {1 << n} entries")
        return cls(n, bits[: 1 << n])

    def words(self) -> np.ndarray:
        """Packed form: 64 entries per ``uint64``, entry ``p`` at word ``p // 64``, bit ``p % 64``."""
        nwords = max(1, (self.size + 63) // 64)
        padded = np.zeros(nwords * 64, dtype=np.uint8)
        padded[: self.size] = self.bits
        return np.packbits(padded, bitorder="little").view("<u8").copy()

    def as_int(self) -> int:
        """Entry ``p`` becomes bit ``p`` of the returned integer."""
        return int.from_bytes(np.packbits(self.bits, bitorder="little").tobytes(), "little")

    @property
    def size(self) -> int:
        return 1 << self.n

    def __getitem__(self, p: int) -> int:
        return int(self.bits[p])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self):
        if self.n <= 6:
            return f"TruthTable(n={self.n}, bits='{''.join(map(str, self.bits))}')"
        return f"TruthTable(n={self.n}, weight={weight(self)})"


@dataclass(frozen=True)
class AnfForm:
    """Boolean polynomial as a set of square-free monomials.

    Each monomial is a frozenset of 1-based variable indices; the empty set is
    the constant 1.
    """

    n: int
    monomials: frozenset[frozenset[int]]

    def __post_init__(self):
        _check_n(self.n)
        mons = frozenset(frozenset(m) for m in self.monomials)
        for m in mons:
            if any(not 1 <= j <= self.n for j in m):
                raise ValueError(f"monomial {sorted(m)} uses a variable outside x1..x{self.n}")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Iterable[int]]) -> AnfForm:
        """Build from possibly repeated terms; repeats cancel as in F_2."""
        acc: set[frozenset[int]] = set()
        for t in terms:
            acc ^= {frozenset(t)}
        return cls(n, frozenset(acc))

    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=-1)

    def sorted_monomials(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(m)) for m in self.monomials), key=lambda m: (len(m), m))

    def __str__(self):
        if not self.monomials:
            return "0"
        return "+".join("*".join(f"x{j}" for j in m) if m else "1" for m in self.sorted_monomials())


def tt_from_anf(anf: AnfForm) -> TruthTable:
    """Evaluate an ANF directly at every point (no transform)."""
    n = anf.n
    points = np.arange(1 << n, dtype=np.int64)
    bits = np.zeros(1 << n, dtype=np.uint8)
    for m in anf.monomials:
        mask = sum(var_mask(j, n) for j in m)
        bits ^= ((points & mask) == mask).astype(np.uint8)
    return TruthTable(n, bits)


def weight(tt: TruthTable) -> int:
    return int(np.count_nonzero(tt.bits))


def distance(t1: TruthTable, t2: TruthTable) -> int:
    if t1.n != t2.n:
        raise DimensionError(f"cannot compare n={t1.n} with n={t2.n}")
    return int(np.count_nonzero(t1.bits != t2.bits))


def linear_index(c: Sequence[int]) -> int:
    """Pack ``(a_1, ..., a_n)`` of an affine coefficient tuple into a point-style index."""
    n = len(c) - 1
    return sum(var_mask(j, n) for j in range(1, n + 1) if c[j])


def coeffs_to_index(c: Sequence[int]) -> int:
    """Index of ``(a_0, ..., a_n)`` with ``a_0`` at significance ``2**n``."""
    n = len(c) - 1
    return (int(c[0]) << n) | linear_index(c)


def index_to_coeffs(e: int, n: int) -> AffineCoeffs:
    return ((e >> n) & 1,) + tuple((e >> (n - j)) & 1 for j in range(1, n + 1))


def affine_tt(c: Sequence[int], n: int) -> TruthTable:
    if len(c) != n + 1:
        raise DimensionError(f"expected {n + 1} affine coefficients, got {len(c)}")
    if any(a not in (0, 1) for a in c):
        raise ValueError(f"affine coefficients must be bits, got {tuple(c)}")
    points = np.arange(1 << n, dtype=np.int64)
    parity = np.bitwise_count(points & linear_index(c)) & 1
    return TruthTable(n, (parity ^ int(c[0])).astype(np.uint8))


def affine_to_anf(c: Sequence[int]) -> AnfForm:
    n = len(c) - 1
    terms = [()] if c[0] else []
    terms += [(j,) for j in range(1, n + 1) if c[j]]
    return AnfForm.from_terms(n, terms)


def _coordinate_ints(n: int) -> list[int]:
    """``cols[k]``: packed table of the point-index bit of significance ``2**k``."""
    points = np.arange(1 << n, dtype=np.int64)
    cols = []
    for k in range(n):
        col = ((points >> k) & 1).astype(np.uint8)
        cols.append(int.from_bytes(np.packbits(col, bitorder="little").tobytes(), "little"))
    return cols


def linear_tables(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(linear_index, packed_table)`` for all ``2**n`` linear functions.

    Walks the linear indices in Gray-code order so each step costs one XOR.
    """
    cols = _coordinate_ints(n)
    table = 0
    yield 0, 0
    for i in range(1, 1 << n):
        k = (i & -i).bit_length() - 1
        table ^= cols[k]
        yield i ^ (i >> 1), table


def brute_force_nonlinearity(tt: TruthTable) -> tuple[int, set[AffineCoeffs]]:
    """Minimum distance to all ``2**(n+1)`` affine functions, and every minimiser."""
    n = tt.n
    if n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    f = tt.as_int()
    ones = (1 << (1 << n)) - 1
    best = 1 << n
    argmin: list[int] = []
    for lin, table in linear_tables(n):
        for a0, g in ((0, table), (1, table ^ ones)):
            d = (f ^ g).bit_count()
            if d < best:
                best, argmin = d, [(a0 << n) | lin]
            elif d == best:
                argmin.append((a0 << n) | lin)
    return best, {index_to_coeffs(e, n) for e in argmin}
