"""Bernoulli numbers, Euler (secant) numbers, character-twisted Bernoulli
numbers, and Dirichlet L-values at non-positive integers.

Everything is exact.  Twisted Bernoulli numbers B_(k,chi) come from the
closed form

    B_(k,chi) = sum_(j<=k) C(k,j) * B_j * f^(j-1) * T_(k-j),
    T_r = sum_(a=1..f) chi(a) * a^r,   f = modulus of chi,

which is the finite-sum equivalent of the defining generating function
sum_a chi(a) t e^(at) / (e^(ft) - 1).  L(-k, chi) = -B_(k+1,chi)/(k+1)
whenever k and chi have opposite parity.

The Euler numbers use the secant generating function 2/(e^t + e^(-t)),
i.e. E_0 = 1, E_odd = 0; this normalization is the one under which
E_k = 2 L(-k, chi_-4) holds exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from threading import Lock

from .characters import DirichletCharacter, opposite_parity
from .cyclotomic import CyclotomicElement, zeta

CharKey = tuple[int, int, tuple[int, ...]]


@lru_cache(maxsize=None)
def _zeta_int_rows(n: int) -> tuple[tuple[int, ...], ...]:
    # Integer coordinate rows of 1, zeta, ..., zeta^(n-1) on the power basis.
    rows = []
    for t in range(n):
        coeffs = zeta(n, t).coeffs
        assert all(c.denominator == 1 for c in coeffs)
        rows.append(tuple(int(c) for c in coeffs))
    return tuple(rows)


class ParityError(ValueError):
    """k and chi have the same parity, so L(-k, chi) = 0 trivially and the
    Bernoulli formula's hypothesis fails."""


class UndefinedCaseError(ValueError):
    """The unit-normalized L-value is only defined for conductor 2^m with
    m >= 3 or p^m with odd p and m >= 2."""


class BernoulliCache:
    """Memo store for B_k, E_k, B_(k,chi) and per-character power moments.

    Values are immutable once written and recomputation is deterministic,
    so concurrent last-writer-wins dict updates are safe; a lock guards
    the growth of the index-addressed sequences, where an interleaved
    append would shift later entries.
    """

    def __init__(self):
        self._bernoulli: list[Fraction] = [Fraction(1)]
        self._euler: list[int] = [1]
        self._twisted: dict[tuple[CharKey, int], CyclotomicElement] = {}
        self._moments: dict[CharKey, list[CyclotomicElement]] = {}
        self._lock = Lock()
        #: keys written since the last persistence sync (see lcong.valuecache)
        self.dirty_keys: set[tuple[CharKey, int]] = set()

    # -- classical sequences -------------------------------------------

    def bernoulli(self, k: int) -> Fraction:
        if k < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if k >= len(self._bernoulli):
            with self._lock:
                while len(self._bernoulli) <= k:
                    j = len(self._bernoulli)
                    # sum_(i<=j) C(j+1, i) B_i = 0  for j >= 1
                    acc = sum(
                        comb(j + 1, i) * b for i, b in enumerate(self._bernoulli)
                    )
                    self._bernoulli.append(Fraction(-acc, j + 1))
        return self._bernoulli[k]

    def euler(self, k: int) -> int:
        if k < 0:
            raise ValueError("Euler index must be >= 0")
        if k >= len(self._euler):
            with self._lock:
                while len(self._euler) <= k:
                    j = len(self._euler)
                    if j % 2:
                        self._euler.append(0)
                        continue
                    # sum over even i <= j of C(j, i) E_i = 0  for even j >= 2
                    acc = sum(
                        comb(j, i) * e
                        for i, e in enumerate(self._euler)
                        if i % 2 == 0
                    )
                    self._euler.append(-acc)
        return self._euler[k]

    # -- character moments ----------------------------------------------

    def power_moment(self, chi: DirichletCharacter, r: int) -> CyclotomicElement:
        """T_r = sum_(a=1..f) chi(a) a^r, cached per character.

        chi(a) has integer power-basis coordinates, so the moment is
        accumulated with plain integer arithmetic: group a by the
        exponent t with chi(a) = zeta^t, then take one integer linear
        combination of the zeta-power coordinate rows.
        """
        key = chi.key()
        moments = self._moments.get(key)
        if moments is None:
            with self._lock:
                moments = self._moments.setdefault(key, [])
        if r < len(moments):
            return moments[r]
        # Growing the list must be serialized: appends are not idempotent
        # (a doubled append would shift every later index).
        with self._lock:
            if r < len(moments):
                return moments[r]
            n = chi.zeta_order
            rows = _zeta_int_rows(n)
            groups: dict[int, list[int]] = {}
            for a in range(1, chi.modulus + 1):
                t = chi.value_exponent(a)
                if t is not None:
                    groups.setdefault(t, []).append(a)
            width = len(rows[0])
            while len(moments) <= r:
                rr = len(moments)
                vec = [0] * width
                for t, residues in groups.items():
                    s = sum(a**rr for a in residues)
                    if s:
                        for i, c in enumerate(rows[t]):
                            if c:
                                vec[i] += s * c
                moments.append(CyclotomicElement(n, vec, reduce=False))
            return moments[r]

    def twisted_bernoulli(self, chi: DirichletCharacter, k: int) -> CyclotomicElement:
        key = (chi.key(), k)
        cached = self._twisted.get(key)
        if cached is not None:
            return cached
        f = chi.modulus
        total = CyclotomicElement.zero(chi.zeta_order)
        for j in range(k + 1):
            b = self.bernoulli(j)
            if b == 0:
                continue
            total = total + self.power_moment(chi, k - j) * (
                comb(k, j) * b * Fraction(f) ** (j - 1)
            )
        self._twisted[key] = total
        self.dirty_keys.add(key)
        return total

    def store_twisted(self, key: tuple[CharKey, int], value: CyclotomicElement) -> None:
        """Seed a precomputed twisted Bernoulli number (e.g. from a file cache)."""
        self._twisted[key] = value


#: Default process-wide cache; sweeps re-use values heavily.
DEFAULT_CACHE = BernoulliCache()


def bernoulli_number(k: int, cache: BernoulliCache = DEFAULT_CACHE) -> Fraction:
    """B_k, with B_0 = 1, B_1 = -1/2 (the t/(e^t - 1) normalization)."""
    return cache.bernoulli(k)


def bernoulli_polynomial(k: int, x: Fraction | int, cache: BernoulliCache = DEFAULT_CACHE) -> Fraction:
    """B_k(x) = sum_j C(k,j) B_j x^(k-j), exact."""
    if k < 0:
        raise ValueError("Bernoulli index must be >= 0")
    x = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)  # x^(k-j), built from the top down
    for j in range(k, -1, -1):
        b = cache.bernoulli(j)
        if b:
            total += comb(k, j) * b * power
        power *= x
    return total


def euler_number(k: int, cache: BernoulliCache = DEFAULT_CACHE) -> int:
    """E_k with E_0 = 1, E_odd = 0 (secant numbers)."""
    return cache.euler(k)


def generalized_bernoulli(
    k: int, chi: DirichletCharacter, cache: BernoulliCache = DEFAULT_CACHE
) -> CyclotomicElement:
    """B_(k,chi) evaluated at the modulus of chi."""
    if k < 0:
        raise ValueError("index must be >= 0")
    return cache.twisted_bernoulli(chi, k)


def l_value(
    k: int, chi: DirichletCharacter, cache: BernoulliCache = DEFAULT_CACHE
) -> CyclotomicElement:
    """L(-k, chi) = -B_(k+1,chi)/(k+1) for k of parity opposite to chi."""
    if k < 0:
        raise ValueError("index must be >= 0")
    if not opposite_parity(chi, k):
        raise ParityError(
            f"k={k} and chi={chi.label()} ({chi.parity()}) have the same parity"
        )
    return cache.twisted_bernoulli(chi, k + 1) * Fraction(-1, k + 1)


def script_l(
    k: int, chi: DirichletCharacter, cache: BernoulliCache = DEFAULT_CACHE
) -> CyclotomicElement:
    """Unit-normalized L-value: (1 - chi(u)) L(-k, chi) with u = 5 for
    conductor 2^m (m >= 3) and u = p + 1 for odd p (m >= 2).

    The factor 1 - chi(u) divides p, which forces the result to be
    p-integral (and 2-integral with a full factor of 2 when p = 2).
    """
    p, m = chi.p, chi.m
    if not chi.is_primitive():
        raise UndefinedCaseError(
            f"chi={chi.label()} is imprimitive (conductor {chi.conductor()})"
        )
    if p == 2 and m >= 3:
        unit = 5
    elif p >= 3 and m >= 2:
        unit = p + 1
    else:
        raise UndefinedCaseError(
            f"normalized L-value undefined for conductor {p}^{m}"
        )
    return (1 - chi(unit)) * l_value(k, chi, cache)
