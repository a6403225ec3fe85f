"""Boolean polynomial ideals whose varieties encode nonlinearity.

Every ideal handled here contains the field equations, so it is
zero-dimensional and radical and its variety is a finite set of points over
the prime field. Emptiness and membership questions are therefore settled by
exhaustive enumeration rather than by Groebner bases.

Polynomials over GF(2) are stored modulo the field equations: a monomial is a
bit mask of variable indices (bit ``j`` is variable ``j``), a polynomial is a
set of monomials. Points of ``{0,1}**m`` are tuples ``(a_0, ..., a_{m-1})``,
enumerated in ascending order of ``sum a_j 2**(m-1-j)``.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from boolnl.bfcore import AffineCoeffs, TruthTable, index_to_coeffs, linear_tables
from boolnl.errors import SizeLimitError
from boolnl.transforms import algebraic_degree

SquareFreeMonomial = tuple[int, ...]

MAX_SUPPORT = 64
MATERIALIZE_LIMIT = 10**6
VARIETY_MAX_M = 24
LAZY_MAX_N = 16
FQ_POINT_LIMIT = 10**7


@functools.lru_cache(maxsize=None)
def _clear_mask(j: int, m: int) -> int:
    """Bitset of the monomial positions in ``[0, 2**m)`` that do not contain variable ``j``."""
    block = (1 << (1 << j)) - 1
    period = 1 << (j + 1)
    return block * (((1 << (1 << m)) - 1) // ((1 << period) - 1))


def _mul_var(bits: int, j: int, m: int) -> int:
    low = _clear_mask(j, m)
    return (bits & ~low) ^ ((bits & low) << (1 << j))


def _width(bits: int) -> int:
    # a monomial using variable j sits at position >= 2**j
    return max(bits.bit_length() - 1, 0).bit_length()


@dataclass(frozen=True)
class PolyF2:
    """Polynomial over GF(2) reduced modulo ``x_j**2 - x_j``.

    ``bits`` has bit ``a`` set iff the monomial with variable mask ``a`` is
    present, so addition is XOR and products never raise an exponent above 1.
    """

    bits: int = 0

    @classmethod
    def from_monomials(cls, masks: Iterable[int]) -> PolyF2:
        bits = 0
        for a in masks:
            bits ^= 1 << a
        return cls(bits)

    @classmethod
    def one(cls) -> PolyF2:
        return cls(1)

    @classmethod
    def var(cls, j: int) -> PolyF2:
        return cls(1 << (1 << j))

    @classmethod
    def from_terms(cls, terms: Iterable[Iterable[int]]) -> PolyF2:
        """Terms given as collections of variable indices; repeats cancel."""
        return cls.from_monomials(sum(1 << j for j in set(t)) for t in terms)

    @property
    def monomials(self) -> frozenset[int]:
        return frozenset(_set_bits(self.bits))

    def __add__(self, other: PolyF2) -> PolyF2:
        return PolyF2(self.bits ^ other.bits)

    def __mul__(self, other: PolyF2) -> PolyF2:
        m = max(_width(self.bits), _width(other.bits))
        if other.bits == 1:
            return self
        acc = 0
        for b in _set_bits(other.bits):
            term = self.bits
            j = 0
            while b:
                if b & 1:
                    term = _mul_var(term, j, m)
                b >>= 1
                j += 1
            acc ^= term
        return PolyF2(acc)

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_one(self) -> bool:
        return self.bits == 1

    def variables(self) -> int:
        """Mask of every variable that occurs."""
        out = 0
        for mon in _set_bits(self.bits):
            out |= mon
        return out

    def evaluate(self, point_mask: int) -> int:
        """Value at the point whose true variables are the bits of ``point_mask``."""
        return sum(1 for mon in _set_bits(self.bits) if mon & point_mask == mon) & 1

    def value_bits(self, m: int) -> int:
        """Values at all points as a bitset indexed by the point's variable mask."""
        if _width(self.bits) > m:
            raise ValueError(f"polynomial uses variables beyond a{m - 1}")
        v = self.bits
        for j in range(m):
            v ^= (v & _clear_mask(j, m)) << (1 << j)
        return v

    def evaluate_all(self, m: int) -> np.ndarray:
        """Values at all ``2**m`` points, in the canonical point order."""
        return _bitset_to_array(self.value_bits(m), m)[_point_masks(m)]

    def render(self, prefix: str = "a") -> str:
        if not self.bits:
            return "0"

        def term(mon: int) -> str:
            if mon == 0:
                return "1"
            return "*".join(f"{prefix}{j}" for j in range(mon.bit_length()) if mon >> j & 1)

        ordered = sorted(self.monomials, key=lambda mon: (mon.bit_count(), mon))
        return "+".join(term(mon) for mon in ordered)

    def __str__(self):
        return self.render()


def _set_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _bitset_to_array(bits: int, m: int) -> np.ndarray:
    nbytes = max(1, (1 << m) // 8)
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[: 1 << m]


@functools.lru_cache(maxsize=32)
def _point_masks(m: int) -> np.ndarray:
    """Variable mask of every point: point ``e`` sets variable ``j`` iff bit ``m-1-j`` of ``e``."""
    e = np.arange(1 << m, dtype=np.int64)
    masks = np.zeros(1 << m, dtype=np.int64)
    for j in range(m):
        masks |= ((e >> (m - 1 - j)) & 1) << j
    masks.flags.writeable = False
    return masks


@dataclass(frozen=True)
class IdealGenerators:
    """Generators of an ideal in ``GF(2)[a_0..a_{m-1}]``; field equations are implied."""

    m: int
    gens: tuple[PolyF2, ...]

    def __post_init__(self):
        for g in self.gens:
            if _width(g.bits) > self.m:
                raise ValueError(f"generator {g} uses a variable outside a0..a{self.m - 1}")


def square_free_monomials(s: int, t: int) -> Iterator[SquareFreeMonomial]:
    """All ``C(s, t)`` supports ``(h_1 < ... < h_t)`` over ``{1..s}``, lexicographically, lazily."""
    if not 1 <= t <= s <= MAX_SUPPORT:
        raise ValueError(f"need 1 <= t <= s <= {MAX_SUPPORT}, got s={s}, t={t}")
    return itertools.combinations(range(1, s + 1), t)


def compose_monomial(m: SquareFreeMonomial, W: Sequence[PolyF2]) -> PolyF2:
    """``W_{h_1} * ... * W_{h_t}`` for ``m = z_{h_1} ... z_{h_t}`` (1-based indices)."""
    out = PolyF2.one()
    for h in m:
        if not 1 <= h <= len(W):
            raise IndexError(f"monomial index {h} outside 1..{len(W)}")
        out = out * W[h - 1]
        if out.is_zero():
            break
    return out


def gn_vector(n: int) -> list[PolyF2]:
    """``a_0 + sum_{x_j(p)=1} a_j`` for every point ``p``, over variables ``a_0..a_n``."""
    if n > LAZY_MAX_N:
        raise SizeLimitError(f"gn_vector limited to n <= {LAZY_MAX_N}, got n={n}")
    out = []
    for p in range(1 << n):
        mons = [1] + [1 << j for j in range(1, n + 1) if p >> (n - j) & 1]
        out.append(PolyF2.from_monomials(mons))
    return out


def jtn_generators(tt: TruthTable, t: int) -> IdealGenerators:
    """Every degree-``t`` square-free product of the entries of ``gn_vector + f``."""
    size = 1 << tt.n
    if not 1 <= t <= size:
        raise ValueError(f"t must lie in 1..{size}, got {t}")
    count = math.comb(size, t)
    if count > MATERIALIZE_LIMIT:
        raise SizeLimitError(
            f"C({size},{t}) = {count} generators exceeds {MATERIALIZE_LIMIT}; "
            "use variety_nonempty_lazy"
        )
    one = PolyF2.one()
    W = [g + one if b else g for g, b in zip(gn_vector(tt.n), tt.bits.tolist())]
    return IdealGenerators(tt.n + 1, tuple(_products(W, t)))


def _products(W: Sequence[PolyF2], t: int) -> Iterator[PolyF2]:
    """``compose_monomial(m, W)`` for every ``m`` in ``M_{len(W),t}``, in the same order.

    Walks the combinations depth-first so partial products are shared.
    """
    s = len(W)

    def walk(start: int, depth: int, prefix: PolyF2) -> Iterator[PolyF2]:
        for h in range(start, s - (t - depth) + 1):
            prod = prefix * W[h]
            if depth + 1 == t:
                yield prod
            else:
                yield from walk(h + 1, depth + 1, prod)

    return walk(0, 0, PolyF2.one())


def variety_points(g: IdealGenerators) -> set[tuple[int, ...]]:
    """All Boolean points where every generator vanishes."""
    if g.m > VARIETY_MAX_M:
        raise SizeLimitError(f"variety enumeration limited to m <= {VARIETY_MAX_M}, got {g.m}")
    alive = (1 << (1 << g.m)) - 1
    for gen in g.gens:
        alive &= ~gen.value_bits(g.m)
        if not alive:
            return set()
    alive_arr = _bitset_to_array(alive, g.m)[_point_masks(g.m)]
    return {index_to_coeffs(e, g.m - 1) for e in np.flatnonzero(alive_arr).tolist()}


def affine_weights(tt: TruthTable) -> np.ndarray:
    """Weight of ``f + g_n(a)`` for every affine index ``a`` (``a_0`` at bit ``n``)."""
    n = tt.n
    if n > LAZY_MAX_N:
        raise SizeLimitError(f"lazy variety scan limited to n <= {LAZY_MAX_N}, got n={n}")
    f = tt.as_int()
    f_bar = f ^ ((1 << (1 << n)) - 1)
    out = np.empty(2 << n, dtype=np.int64)
    for lin, table in linear_tables(n):
        out[lin] = (f ^ table).bit_count()
        out[(1 << n) | lin] = (f_bar ^ table).bit_count()
    return out


def variety_witnesses(tt: TruthTable, t: int) -> set[AffineCoeffs]:
    """The full variety of ``J_t(f)``, found by the weight criterion.

    All degree-``t`` square-free products of a 0/1 vector vanish exactly when
    fewer than ``t`` of its entries are 1.
    """
    w = affine_weights(tt)
    return {index_to_coeffs(e, tt.n) for e in np.flatnonzero(w <= t - 1).tolist()}


def variety_nonempty_lazy(tt: TruthTable, t: int) -> AffineCoeffs | None:
    """First point of the variety of ``J_t(f)`` in ascending order, or None if it is empty."""
    w = affine_weights(tt)
    hits = np.flatnonzero(w <= t - 1)
    return index_to_coeffs(int(hits[0]), tt.n) if hits.size else None


def _ideal_search(tt: TruthTable) -> tuple[int, np.ndarray]:
    w = affine_weights(tt)
    # the J_1 test only succeeds for affine f, so skip it otherwise
    j = 1 if algebraic_degree(tt) <= 1 else 2
    while not (w <= j - 1).any():
        j += 1
    return j - 1, w


def nonlinearity_ideal(tt: TruthTable) -> int:
    """Smallest ``t`` for which ``J_{t+1}(f)`` has a nonempty variety."""
    return _ideal_search(tt)[0]


def closest_affine_ideal(tt: TruthTable) -> set[AffineCoeffs]:
    """Variety of ``J_{N+1}(f)`` with ``N`` the nonlinearity: every closest affine function."""
    nl, w = _ideal_search(tt)
    return {index_to_coeffs(e, tt.n) for e in np.flatnonzero(w <= nl).tolist()}


# -- symmetric-function ideals over a prime field -----------------------------


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


@dataclass(frozen=True)
class FqVector:
    q: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"q={self.q} is not prime")
        if any(not 0 <= v < self.q for v in self.entries):
            raise ValueError(f"entries must lie in [0, {self.q})")

    @property
    def s(self) -> int:
        return len(self.entries)


def _elementary_all(entries: Sequence[int], q: int, top: int) -> list[int]:
    # coefficients of prod(1 + v_j z) truncated at z**top
    e = [1] + [0] * top
    for v in entries:
        for k in range(top, 0, -1):
            e[k] = (e[k] + v * e[k - 1]) % q
    return e


def elementary_symmetric_eval(i: int, v: FqVector) -> int:
    if not 1 <= i <= v.s:
        raise ValueError(f"need 1 <= i <= {v.s}, got {i}")
    return _elementary_all(v.entries, v.q, i)[i]


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def weight_ball(s: int, r: int, q: int) -> set[tuple[int, ...]]:
    """All vectors of ``(F_q)**s`` with at most ``r`` nonzero entries."""
    return {v for v in itertools.product(range(q), repeat=s) if hamming_weight(v) <= r}


def _check_field(s: int, q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if q**s > FQ_POINT_LIMIT:
        raise SizeLimitError(f"q**s = {q**s} exceeds {FQ_POINT_LIMIT}")


def symmetric_variety(s: int, t: int, q: int) -> set[tuple[int, ...]]:
    """Points of ``(F_q)**s`` where ``sigma_t, ..., sigma_s`` all vanish (``t = s+1``: no constraint)."""
    _check_field(s, q)
    if not 1 <= t <= s + 1:
        raise ValueError(f"need 1 <= t <= s+1, got t={t}")
    out = set()
    for v in itertools.product(range(q), repeat=s):
        sig = _elementary_all(v, q, s)
        if all(x == 0 for x in sig[t:]):
            out.add(v)
    return out


def monomial_variety(s: int, t: int, q: int) -> set[tuple[int, ...]]:
    """Points of ``(F_q)**s`` where every square-free monomial of degree ``t`` vanishes."""
    _check_field(s, q)
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if t > s:
        return set(itertools.product(range(q), repeat=s))
    monos = list(square_free_monomials(s, t))
    out = set()
    for v in itertools.product(range(q), repeat=s):
        if all(math.prod(v[h - 1] for h in mon) % q == 0 for mon in monos):
            out.add(v)
    return out
