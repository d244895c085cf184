"""Dirichlet characters modulo prime powers.

The unit group (Z/p^m)* is cyclic for odd p and for p^m in {2, 4}; for
p = 2, m >= 3 it is generated by -1 (order 2) and 5 (order 2^(m-2)).
A character is pinned down by generator images, stored as exponents
e_i with chi(g_i) = zeta_(order_i)^(e_i); every value then lives in
Q(zeta_N) with N = phi(p^m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .cyclotomic import CyclotomicElement, euler_phi, zeta

#: Largest modulus for which a full discrete-log table is built.
MAX_TABLE_MODULUS = 200_000


class ResourceLimitError(RuntimeError):
    """Modulus too large for the exhaustive discrete-log table."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _multiplicative_order(a: int, modulus: int, group_order: int) -> int:
    order = group_order
    for q in _prime_factors(group_order):
        while order % q == 0 and pow(a, order // q, modulus) == 1:
            order //= q
    return order


def smallest_primitive_root(p: int, m: int) -> int:
    """Smallest primitive root modulo p^m, p an odd prime."""
    modulus = p**m
    phi = euler_phi(modulus)
    for g in range(2, modulus):
        if math.gcd(g, p) == 1 and _multiplicative_order(g, modulus, phi) == phi:
            return g
    raise ArithmeticError(f"no primitive root modulo {modulus}")


@dataclass(frozen=True, eq=False)
class UnitGroup:
    """(Z/p^m)* presented by explicit generators and a full dlog table."""

    p: int
    m: int
    modulus: int
    generators: tuple[tuple[int, int], ...]  # (residue, order) pairs
    dlog: dict[int, tuple[int, ...]] = field(repr=False)

    def exponents(self, a: int) -> tuple[int, ...] | None:
        """Exponent vector of a over the generators, or None if p | a."""
        return self.dlog.get(a % self.modulus)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitGroup):
            return NotImplemented
        return (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))


def build_unit_group(p: int, m: int, *, max_modulus: int = MAX_TABLE_MODULUS) -> UnitGroup:
    """Generators and discrete logs for (Z/p^m)*.

    Odd p uses the smallest primitive root; p = 2, m >= 3 uses the pair
    (-1, 5).  The degenerate modulus 2 gets the trivial one-generator
    presentation so that the lone character mod 2 is still expressible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("exponent m must be >= 1")
    modulus = p**m
    if modulus > max_modulus:
        raise ResourceLimitError(
            f"modulus {modulus} exceeds dlog table bound {max_modulus}"
        )

    if p == 2 and m == 1:
        generators: tuple[tuple[int, int], ...] = ((1, 1),)
    elif p == 2 and m >= 3:
        generators = ((modulus - 1, 2), (5, 2 ** (m - 2)))
    elif p == 2:  # modulus 4
        generators = ((3, 2),)
    else:
        g = smallest_primitive_root(p, m)
        generators = ((g, euler_phi(modulus)),)

    dlog: dict[int, tuple[int, ...]] = {}
    ranges = [range(order) for _, order in generators]
    for exps in product(*ranges):
        residue = 1
        for (g, _), e in zip(generators, exps):
            residue = residue * pow(g, e, modulus) % modulus
        dlog[residue] = tuple(exps)
    if len(dlog) != euler_phi(modulus):
        raise ArithmeticError("generator presentation does not cover the unit group")
    return UnitGroup(p=p, m=m, modulus=modulus, generators=generators, dlog=dlog)


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    """A character of (Z/p^m)*, zero on residues sharing a factor with p.

    ``images[i]`` is the exponent e_i with chi(g_i) = zeta_(order_i)^(e_i).
    Values are embedded in Q(zeta_N), N = phi(p^m).
    """

    group: UnitGroup
    images: tuple[int, ...]
    zeta_order: int = field(init=False)
    _exponent_table: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.images) != len(self.group.generators):
            raise ValueError("one image exponent per generator required")
        n = max(euler_phi(self.group.modulus), 1)
        norm_images = tuple(
            e % order for e, (_, order) in zip(self.images, self.group.generators)
        )
        object.__setattr__(self, "images", norm_images)
        object.__setattr__(self, "zeta_order", n)
        table = {}
        for residue, exps in self.group.dlog.items():
            total = 0
            for e_img, exp, (_, order) in zip(norm_images, exps, self.group.generators):
                total += e_img * exp * (n // order)
            table[residue] = total % n
        object.__setattr__(self, "_exponent_table", table)

    # -- identity -------------------------------------------------------

    @property
    def p(self) -> int:
        return self.group.p

    @property
    def m(self) -> int:
        return self.group.m

    @property
    def modulus(self) -> int:
        return self.group.modulus

    def key(self) -> tuple[int, int, tuple[int, ...]]:
        """Stable serialization key (p, m, exponent vector)."""
        return (self.p, self.m, self.images)

    def label(self) -> str:
        return f"{self.modulus}:" + ",".join(str(e) for e in self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # -- evaluation -----------------------------------------------------

    def __call__(self, a: int) -> CyclotomicElement:
        exp = self._exponent_table.get(a % self.modulus)
        if exp is None:
            return CyclotomicElement.zero(self.zeta_order)
        return zeta(self.zeta_order, exp)

    def value_exponent(self, a: int) -> int | None:
        """Exponent t with chi(a) = zeta_N^t, or None when chi(a) = 0."""
        return self._exponent_table.get(a % self.modulus)

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.group, tuple(-e for e in self.images))

    # -- invariants -----------------------------------------------------

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.images)

    def is_odd(self) -> bool:
        return self.value_exponent(self.modulus - 1) != 0

    def is_even(self) -> bool:
        return not self.is_odd()

    def parity(self) -> str:
        return "odd" if self.is_odd() else "even"

    def conductor(self) -> int:
        """Smallest divisor d of p^m with chi trivial on the kernel of
        (Z/p^m)* -> (Z/d)*."""
        for j in range(self.m + 1):
            d = self.p**j
            if all(
                self._exponent_table[a] == 0
                for a in self._exponent_table
                if a % d == 1 % d
            ):
                return d
        raise AssertionError("unreachable: chi is trivial on the full kernel of d = p^m")

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus


def make_character(group: UnitGroup, images: tuple[int, ...] | list[int]) -> DirichletCharacter:
    return DirichletCharacter(group, tuple(images))


def character(p: int, m: int, images: tuple[int, ...] | list[int]) -> DirichletCharacter:
    return make_character(build_unit_group(p, m), images)


def opposite_parity(chi: DirichletCharacter, k: int) -> bool:
    """True when chi(-1) = (-1)^(k+1), the parity hypothesis of the L-value formula."""
    return chi.is_odd() == (k % 2 == 0)


def enumerate_characters(p: int, m: int) -> list[DirichletCharacter]:
    """All characters modulo p^m, in lexicographic image order."""
    group = build_unit_group(p, m)
    ranges = [range(order) for _, order in group.generators]
    return [DirichletCharacter(group, tuple(exps)) for exps in product(*ranges)]


def enumerate_primitive(p: int, m: int) -> list[DirichletCharacter]:
    """Characters modulo p^m of conductor exactly p^m."""
    return [chi for chi in enumerate_characters(p, m) if chi.is_primitive()]


def chi_minus4() -> DirichletCharacter:
    """The unique non-trivial character modulo 4 (odd, quadratic)."""
    return character(2, 2, (1,))
