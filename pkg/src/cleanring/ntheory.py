"""Exact elementary number theory on Python integers.

Factorization is deterministic trial division; every function here is a
pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    def exponent(self, q: int) -> int:
        for prime, k in self.factors:
            if prime == q:
                return k
        return 0


def _check_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Prime-power decomposition of ``n`` by trial division."""
    _check_positive(n)
    factors = []
    m = n
    for q in (2, 3):
        if m % q == 0:
            k = 0
            while m % q == 0:
                m //= q
                k += 1
            factors.append((q, k))
    # 6k +- 1 wheel
    q, step = 5, 2
    while q * q <= m:
        if m % q == 0:
            k = 0
            while m % q == 0:
                m //= q
                k += 1
            factors.append((q, k))
        q += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def primes_in(lo: int, hi: int) -> list[int]:
    return [q for q in range(max(lo, 2), hi + 1) if is_prime(q)]


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in ascending order."""
    divs = [1]
    for q, k in factorize(n):
        divs = [d * q**e for d in divs for e in range(k + 1)]
    return tuple(sorted(divs))


def lcm(*args: int) -> int:
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


@lru_cache(maxsize=65536)
def euler_phi(n: int) -> int:
    out = 1
    for q, k in factorize(n):
        out *= q ** (k - 1) * (q - 1)
    return out


def moebius(n: int) -> int:
    f = factorize(n)
    if any(k > 1 for _, k in f):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=262144)
def mult_order(a: int, n: int) -> int:
    """Least k >= 1 with a**k == 1 (mod n).

    Only divisors of phi(n) are tried, smallest first.
    """
    _check_positive(n)
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    if n == 1:
        return 1
    a %= n
    for k in divisors(euler_phi(n)):
        if pow(a, k, n) == 1:
            return k
    raise ArithmeticError(f"no order found for {a} mod {n}")  # pragma: no cover


def is_primitive_root(a: int, n: int) -> bool:
    return mult_order(a, n) == euler_phi(n)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime modulus, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def epsilon(r: int) -> int:
    """1 for r == 1, 2 for r >= 2 (exponent cap used in prime-power cases)."""
    _check_positive(r, "r")
    return 1 if r == 1 else 2


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(k == 1 for _, k in factorize(abs(n)))
