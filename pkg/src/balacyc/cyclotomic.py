"""Exact arithmetic in cyclotomic integer rings.

Integer polynomials are dense coefficient tuples, lowest degree first.
An element of Z[zeta_N] is stored by its coordinates in the power basis
{1, zeta_N, ..., zeta_N**(phi(N)-1)}, reduced modulo the N-th cyclotomic
polynomial, so equality and zero tests are exact coordinate comparisons.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient, by trial-division factorization.

    >>> [euler_phi(n) for n in (1, 2, 6, 30, 105)]
    [1, 1, 2, 8, 48]
    """
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n in increasing order.

    >>> divisors(12)
    (1, 2, 3, 4, 6, 12)
    """
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate at desk scale."""
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of z**i.

    Trailing zeros are trimmed on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1.

    >>> IntPoly((1, 0, 1)).degree
    2
    >>> IntPoly((0, 0)) == IntPoly(())
    True
    >>> IntPoly((-1, 1)) * IntPoly((1, 1))
    IntPoly(coeffs=(-1, 0, 1))
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPoly(tuple(summed))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        if len(a) < len(b):
            a, b = b, a
        prod = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(b):
            if c:
                prod[i : i + len(a)] = [x + c * y for x, y in zip(prod[i : i + len(a)], a)]
        return IntPoly(tuple(prod))

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor (exact over Z).

        >>> divmod(IntPoly((-1, 0, 0, 0, 0, 0, 1)), IntPoly((1, 1, 1)))
        (IntPoly(coeffs=(-1, 1, 0, -1, 1)), IntPoly(coeffs=()))
        """
        if not other.is_monic():
            raise ValueError("division is only supported by monic polynomials")
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) <= d:
            return IntPoly(()), self
        quot = [0] * (len(rem) - d)
        body = other.coeffs[:-1]
        for top in range(len(rem) - 1, d - 1, -1):
            q = rem[top]
            quot[top - d] = q
            if q:
                rem[top] = 0
                for j, c in enumerate(body):
                    rem[top - d + j] -= q * c
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:d]))

    def __call__(self, x):
        """Evaluate by Horner's rule; works for any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, lowest degree first."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list[str]) -> IntPoly:
        return cls(tuple(int(c) for c in data))


def xn_minus_1(n: int) -> IntPoly:
    """The polynomial z**n - 1."""
    return IntPoly((-1,) + (0,) * (n - 1) + (1,))


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    Computed by exact division of z**n - 1 by the product of the
    cyclotomic polynomials of the proper divisors of n.

    >>> cyclotomic(1).coeffs
    (-1, 1)
    >>> cyclotomic(2).coeffs
    (1, 1)
    >>> cyclotomic(6).coeffs
    (1, -1, 1)
    >>> cyclotomic(105).coeffs[7]
    -2
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return IntPoly((-1, 1))
    cofactor = IntPoly((1,))
    for d in divisors(n)[:-1]:
        cofactor = cofactor * cyclotomic(d)
    quot, rem = divmod(xn_minus_1(n), cofactor)
    if not rem.is_zero():
        raise AssertionError(f"non-exact cyclotomic division at n={n}")
    return quot


@dataclass(frozen=True)
class CycInt:
    """Cyclotomic integer: power-basis coordinates modulo Phi_conductor.

    Two values are equal exactly when conductor and coordinates agree;
    the representation is canonical, so ``is_zero`` is an exact test.
    """

    conductor: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        if len(self.coords) != euler_phi(self.conductor):
            raise ValueError(
                f"need {euler_phi(self.conductor)} coordinates for conductor {self.conductor}"
            )
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def zero(cls, conductor: int) -> CycInt:
        return cls(conductor, (0,) * euler_phi(conductor))

    @classmethod
    def one(cls, conductor: int) -> CycInt:
        return cls(conductor, (1,) + (0,) * (euler_phi(conductor) - 1))

    @classmethod
    def from_int(cls, conductor: int, value: int) -> CycInt:
        return cls(conductor, (value,) + (0,) * (euler_phi(conductor) - 1))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _require_same_ring(self, other: CycInt) -> None:
        if self.conductor != other.conductor:
            raise ValueError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}"
            )

    def __add__(self, other: CycInt) -> CycInt:
        self._require_same_ring(other)
        return CycInt(self.conductor, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._require_same_ring(other)
        return CycInt(self.conductor, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> CycInt:
        return CycInt(self.conductor, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.conductor, tuple(other * a for a in self.coords))
        if not isinstance(other, CycInt):
            return NotImplemented
        self._require_same_ring(other)
        n = self.conductor
        a, b = self.coords, other.coords
        m = len(a)
        conv = [0] * (2 * m - 1)
        for i, c in enumerate(a):
            if c:
                conv[i : i + m] = [x + c * y for x, y in zip(conv[i : i + m], b)]
        table = _power_table(n)
        res = list(conv[:m]) + [0] * (m - len(conv[:m]))
        for j in range(m, len(conv)):
            c = conv[j]
            if c:
                res = [x + c * t for x, t in zip(res, table[j % n])]
        return CycInt(n, tuple(res))

    __rmul__ = __mul__

    def complex_value(self) -> complex:
        """Float embedding at zeta_N = exp(2*pi*i/N); for shadow checks only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(c * z**t for t, c in enumerate(self.coords))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta_n**j for j = 0..n-1.

    Built by repeated multiplication by z, replacing z**phi(n) by the
    tail of the monic relation Phi_n(z) = 0 whenever the degree overflows.
    """
    phi = euler_phi(n)
    mod = cyclotomic(n).coeffs
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        lead = cur[-1]
        nxt = [0] + cur[:-1]
        if lead:
            nxt = [x - lead * c for x, c in zip(nxt, mod[:phi])]
        cur = nxt
    return tuple(rows)


def root_power(n: int, e: int) -> CycInt:
    """zeta_n**e as a reduced element of Z[zeta_n]; e may be any integer.

    >>> root_power(3, 2).coords
    (-1, -1)
    >>> root_power(6, 2).coords
    (-1, 1)
    >>> root_power(5, 0) == CycInt.one(5)
    True
    """
    if n < 1:
        raise ValueError("n must be positive")
    return CycInt(n, _power_table(n)[e % n])


def eval_at_root(values, n: int) -> CycInt:
    """Sum of values[l] * zeta_n**l, exponents taken modulo n.

    Accepts an IntPoly or any integer sequence. This is the evaluation
    map Z[Z_n] -> Z[zeta_n] underlying all vanishing-sum tests here.

    >>> eval_at_root(cyclotomic(6), 6).is_zero()
    True
    >>> eval_at_root([1, 1, 1, 1, 1, 1], 6).is_zero()
    True
    """
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = values.coeffs if isinstance(values, IntPoly) else values
    table = _power_table(n)
    acc = [0] * euler_phi(n)
    for exp, c in enumerate(coeffs):
        if c:
            acc = [x + c * t for x, t in zip(acc, table[exp % n])]
    return CycInt(n, tuple(acc))
