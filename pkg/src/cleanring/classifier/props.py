"""Explicit case lists for phi(n) = k * ord_n(p), k in {1, 2, 4}.

Each ``*_cases`` function is a literal case-by-case characterization in
terms of the shape of n and the order of p modulo prime powers; each
``*_direct`` function evaluates the defining predicate straight from
orders and totients.  The two are kept separate so they can be checked
against each other exhaustively.
"""

from __future__ import annotations

from itertools import permutations
from math import gcd

from ..ntheory import divisors, epsilon, euler_phi, factorize, is_prime, mult_order

RATIO_OTHER = "other"


def _check(n: int, p: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if n % p == 0:
        raise ValueError(f"p = {p} divides n = {n}")


def prop26_direct(n: int, p: int):
    """k in {1, 2, 4} with phi(n) = k ord_n(p), else ``"other"``."""
    _check(n, p)
    k, rem = divmod(euler_phi(n), mult_order(p, n))
    return k if rem == 0 and k in (1, 2, 4) else RATIO_OTHER


class Shape:
    """n = 2^t * prod q_i^r_i together with order tests for p."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        f = factorize(n)
        self.t = f.exponent(2)
        self.odd = [(q, r) for q, r in f if q != 2]

    # ord_M(p) = phi(M) / k
    def ratio_is(self, M: int, k: int) -> bool:
        return k * mult_order(self.p, M) == euler_phi(M)

    def pr(self, q: int, r: int, capped: bool = True) -> bool:
        """p is a primitive root of q^eps(r) (or of q^r when not capped)."""
        return self.ratio_is(q ** (epsilon(r) if capped else r), 1)

    def half(self, q: int, r: int, capped: bool = True) -> bool:
        return self.ratio_is(q ** (epsilon(r) if capped else r), 2)

    def quarter(self, q: int, r: int, capped: bool = True) -> bool:
        return self.ratio_is(q ** (epsilon(r) if capped else r), 4)

    def ordp(self, M: int) -> int:
        return mult_order(self.p, M)

    def mod(self, k: int) -> int:
        return self.p % k

    def odd_count(self, count: int, twos: tuple[int, ...]) -> bool:
        return len(self.odd) == count and self.t in twos


def phe(q: int, r: int, capped: bool = True) -> int:
    """q^(e-1) (q - 1) with e = eps(r) or r."""
    return euler_phi(q ** (epsilon(r) if capped else r))


def exact_div(x: int, k: int) -> int | None:
    return x // k if x % k == 0 else None


def gcd_is(a: int | None, b: int | None, value: int) -> bool:
    return a is not None and b is not None and gcd(a, b) == value


# -- phi(n) = k ord_n(p) --------------------------------------------------

def _prop26_k1(s: Shape) -> str | None:
    n, p = s.n, s.p
    if n in (1, 2):
        return "1a"
    if n == 4 and p % 4 == 3:
        return "1b"
    if s.odd_count(1, (0, 1)):
        (q, r), = s.odd
        if s.pr(q, r):
            return "1c"
    return None


def _prop26_k2(s: Shape) -> str | None:
    n, p = s.n, s.p
    if (n == 4 and p % 4 == 1) or (n == 8 and p % 8 != 1):
        return "2a"
    if not s.odd and s.t >= 4 and p % 16 in (3, 5, 11, 13):
        return "2b"
    if s.odd_count(1, (0, 1)):
        (q, r), = s.odd
        if s.half(q, r):
            return "2c"
    if s.odd_count(1, (2,)):
        (q, r), = s.odd
        if s.pr(q, r) or (p % 4 == 3 and q % 4 == 3 and s.half(q, r)):
            return "2d"
    if s.odd_count(2, (0, 1)):
        for (q1, r1), (q2, r2) in permutations(s.odd):
            if q2 % 4 != 3 or gcd(phe(q1, r1), phe(q2, r2)) != 2:
                continue
            if s.pr(q1, r1) and (s.pr(q2, r2) or s.half(q2, r2)):
                return "2e"
    return None


def _prop26_k4(s: Shape) -> str | None:
    n, p = s.n, s.p
    if (n == 8 and p % 8 == 1) or (n == 16 and p % 16 in (7, 9, 15)):
        return "3a"
    if not s.odd and s.t >= 5 and p % 32 in (7, 9, 23, 25):
        return "3b"
    if s.odd_count(1, (0, 1)):
        (q, r), = s.odd
        if q % 4 == 1 and s.quarter(q, r):
            return "3c"
    if s.odd_count(2, (0, 1)):
        for (q1, r1), (q2, r2) in permutations(s.odd):
            f1, f2 = phe(q1, r1), phe(q2, r2)
            if s.pr(q1, r1) and s.pr(q2, r2) and gcd(f1, f2) == 4:
                return "3d"
            if s.pr(q1, r1) and s.half(q2, r2) and gcd_is(f1, exact_div(f2, 2), 2):
                return "3d"
            if s.half(q1, r1) and s.half(q2, r2) and gcd_is(exact_div(f1, 2), exact_div(f2, 2), 1):
                return "3d"
            if s.pr(q1, r1) and s.quarter(q2, r2) and gcd_is(f1, exact_div(f2, 4), 1):
                return "3d"
    if s.odd_count(3, (0, 1)):
        for (q1, r1), (q2, r2), (q3, r3) in permutations(s.odd):
            fs = [phe(q, r, False) for q, r in ((q1, r1), (q2, r2), (q3, r3))]
            if not all(gcd(a, b) == 2 for a, b in ((fs[0], fs[1]), (fs[0], fs[2]), (fs[1], fs[2]))):
                continue
            pr1, pr2, pr3 = (s.pr(q, r, False) for q, r in ((q1, r1), (q2, r2), (q3, r3)))
            odd_half2 = s.half(q2, r2, False) and s.ordp(q2**r2) % 2 == 1
            odd_half3 = s.half(q3, r3, False) and s.ordp(q3**r3) % 2 == 1
            if (pr1 and pr2 and pr3) or (pr1 and pr2 and odd_half3) or (pr1 and odd_half2 and odd_half3):
                return "3e"
    if s.odd_count(1, (2,)):
        (q, r), = s.odd
        half = s.half(q, r, False)
        if (p % 4 == 1 and half) or (p % 4 == 3 and q % 4 == 1 and half) or (
            p % 4 == 3 and q % 8 == 5 and s.quarter(q, r, False)
        ):
            return "3f"
    if s.odd_count(2, (2,)):
        for (q1, r1), (q2, r2) in permutations(s.odd):
            if q2 % 4 != 3:
                continue
            g2 = gcd(phe(q1, r1), phe(q2, r2)) == 2
            if g2 and s.pr(q1, r1) and s.pr(q2, r2):
                return "3g"
            if g2 and s.pr(q1, r1) and s.half(q2, r2):
                return "3g"
            if (
                p % 4 == 3 and q1 % 4 == 3
                and s.half(q1, r1, False) and s.half(q2, r2, False)
                and gcd(phe(q1, r1, False) // 2, phe(q2, r2, False) // 2) == 1
            ):
                return "3g"
    if s.odd_count(1, (3,)):
        (q, r), = s.odd
        if s.pr(q, r, False) or (p % 8 != 1 and q % 4 == 3 and s.half(q, r, False)):
            return "3h"
    if len(s.odd) == 1 and s.t >= 4:
        (q, r), = s.odd
        if q % 4 == 3 and p % 16 in (3, 5, 11, 13) and (s.pr(q, r, False) or s.half(q, r, False)):
            return "3i"
    return None


_PROP26 = {1: _prop26_k1, 2: _prop26_k2, 4: _prop26_k4}


def prop26_cases(n: int, p: int, k: int) -> tuple[bool, str | None]:
    """Evaluate the explicit case list for phi(n) = k ord_n(p)."""
    _check(n, p)
    if k not in _PROP26:
        raise ValueError(f"k must be 1, 2 or 4, got {k}")
    # phi and ord are unchanged by dropping a single factor 2
    if n % 4 == 2:
        n //= 2
    label = _PROP26[k](Shape(n, p))
    return label is not None, label


# -- refinements with conditions on proper divisors ---------------------------

def prop32_direct(n: int, p: int, item: int) -> bool:
    _check(n, p)
    phi, o = euler_phi(n), mult_order(p, n)
    proper = [m for m in divisors(n) if m != n]
    if item == 1:
        return 2 * o == phi and o % 2 == 1
    if item == 2:
        return 2 * o == phi and all(mult_order(p, m) == euler_phi(m) for m in proper)
    if item == 3:
        return 4 * o == phi and o % 2 == 1
    if item == 4:
        return 4 * o == phi and all(euler_phi(m) != 4 * mult_order(p, m) for m in proper)
    if item == 5:
        return 4 * o == phi and all(mult_order(p, m) == euler_phi(m) for m in proper)
    raise ValueError(f"item must be 1..5, got {item}")


def _prop32_item1(s: Shape) -> str | None:
    if s.n == 4 and s.p % 4 == 1:
        return "1a"
    if s.odd_count(1, (0, 1)):
        (q, r), = s.odd
        if q % 4 == 3 and s.half(q, r):
            return "1b"
    return None


def _prop32_item2(s: Shape) -> str | None:
    n, p = s.n, s.p
    if (n == 4 and p % 4 == 1) or (n == 8 and p % 4 == 3):
        return "2a"
    if is_prime(n) and n > 2 and 2 * s.ordp(n) == n - 1:
        return "2b"
    if s.t == 2 and len(s.odd) == 1 and s.odd[0][1] == 1:
        q = s.odd[0][0]
        if p % 4 == 3 and s.pr(q, 1):
            return "2c"
    f = factorize(n)
    if len(f) == 2 and all(r == 1 for _, r in f):
        q1, q2 = f.primes
        if s.pr(q1, 1) and s.pr(q2, 1) and gcd(q1 - 1, q2 - 1) == 2:
            return "2d"
    return None


def _prop32_item3(s: Shape) -> str | None:
    n, p = s.n, s.p
    if n == 8 and p % 8 == 1:
        return "3a"
    if s.odd_count(1, (0, 1)):
        (q, r), = s.odd
        if q % 8 == 5 and s.quarter(q, r):
            return "3b"
    if s.odd_count(2, (0, 1)):
        for (q1, r1), (q2, r2) in permutations(s.odd):
            if q1 % 4 != 3 or q2 % 4 != 3:
                continue
            f1, f2 = phe(q1, r1), phe(q2, r2)
            if s.pr(q1, r1) and s.half(q2, r2) and gcd_is(f1, exact_div(f2, 2), 2):
                return "3c"
            if s.half(q1, r1) and s.half(q2, r2) and gcd_is(exact_div(f1, 2), exact_div(f2, 2), 1):
                return "3c"
    if s.odd_count(1, (2,)):
        (q, r), = s.odd
        if q % 4 == 3 and p % 4 == 1 and s.half(q, r, False):
            return "3d"
    return None


def _squarefree_odd(s: Shape, count: int, t: int) -> list[int] | None:
    if s.t != t or len(s.odd) != count or any(r != 1 for _, r in s.odd):
        return None
    return [q for q, _ in s.odd]


def _prop32_item4(s: Shape, corrected: bool = False) -> str | None:
    # corrected=True drops the three sub-cases that let a proper divisor
    # reach ratio 4: p = 9 (mod 16) at n = 16, the third n = 4 q1 q2 bullet,
    # and p = 1 (mod 8) resp. p = 5 (mod 8) in the two n = 8q bullets
    n, p = s.n, s.p
    if (n == 8 and p % 8 == 1) or (n == 16 and p % 16 in ((7, 15) if corrected else (7, 9, 15))):
        return "4a"
    qs = _squarefree_odd(s, 1, 0)
    if qs:
        q = qs[0]
        if q % 4 == 1 and 4 * s.ordp(q) == q - 1:
            return "4b"
    qs = _squarefree_odd(s, 2, 0)
    if qs:
        for q1, q2 in permutations(qs):
            o1, o2 = s.ordp(q1), s.ordp(q2)
            if o1 == q1 - 1 and o2 == q2 - 1 and gcd(q1 - 1, q2 - 1) == 4:
                return "4c"
            if o1 == q1 - 1 and 2 * o2 == q2 - 1 and gcd(q1 - 1, (q2 - 1) // 2) == 2:
                return "4c"
            if 2 * o1 == q1 - 1 and 2 * o2 == q2 - 1 and gcd((q1 - 1) // 2, (q2 - 1) // 2) == 1:
                return "4c"
    qs = _squarefree_odd(s, 3, 0)
    if qs:
        for q1, q2, q3 in permutations(qs):
            if not all(gcd(a - 1, b - 1) == 2 for a, b in ((q1, q2), (q1, q3), (q2, q3))):
                continue
            prim = [s.ordp(q) == q - 1 for q in (q1, q2, q3)]
            o3 = s.ordp(q3)
            if all(prim) or (prim[0] and prim[1] and 2 * o3 == q3 - 1 and o3 % 2 == 1):
                return "4d"
    # n = 4q with q any prime; q = 2 would need ord_2(p) = 1/2 and never matches
    if n % 4 == 0 and is_prime(n // 4):
        q = n // 4
        half = 2 * s.ordp(q) == q - 1
        if (p % 4 == 1 and half) or (p % 4 == 3 and q % 4 == 1 and half):
            return "4e"
    qs = _squarefree_odd(s, 2, 2)
    if qs:
        for q1, q2 in permutations(qs):
            if q2 % 4 != 3:
                continue
            o1, o2 = s.ordp(q1), s.ordp(q2)
            g2 = gcd(q1 - 1, q2 - 1) == 2
            if g2 and o1 == q1 - 1 and o2 == q2 - 1:
                return "4f"
            if g2 and p % 4 == 3 and o1 == q1 - 1 and 2 * o2 == q2 - 1:
                return "4f"
            if not corrected and (
                gcd((q1 - 1) // 2, (q2 - 1) // 2) == 1 and p % 4 == 3 and q1 % 4 == 3
                and 2 * o1 == q1 - 1 and 2 * o2 == q2 - 1
            ):
                return "4f"
    qs = _squarefree_odd(s, 1, 3)
    if qs:
        q = qs[0]
        o = s.ordp(q)
        if corrected:
            if (p % 8 != 1 and o == q - 1) or (p % 4 == 3 and q % 4 == 3 and 2 * o == q - 1):
                return "4g"
        elif o == q - 1 or (p % 8 != 1 and q % 4 == 3 and 2 * o == q - 1):
            return "4g"
    return None


def _prop32_item5(s: Shape) -> str | None:
    qs = _squarefree_odd(s, 1, 0)
    if qs:
        q = qs[0]
        if q % 4 == 1 and 4 * s.ordp(q) == q - 1:
            return "5a"
    qs = _squarefree_odd(s, 2, 0)
    if qs:
        q1, q2 = qs
        if s.ordp(q1) == q1 - 1 and s.ordp(q2) == q2 - 1 and gcd(q1 - 1, q2 - 1) == 4:
            return "5b"
    return None


_PROP32 = {1: _prop32_item1, 2: _prop32_item2, 3: _prop32_item3, 4: _prop32_item4, 5: _prop32_item5}


def prop32_item(n: int, p: int, item: int, corrected: bool = False) -> tuple[bool, str | None]:
    """Evaluate the explicit case list of one refinement item (1..5).

    The literal list for item 4 over-accepts; ``corrected=True`` evaluates
    the amended list instead (other items are unaffected).
    """
    _check(n, p)
    if item not in _PROP32:
        raise ValueError(f"item must be 1..5, got {item}")
    shape = Shape(n, p)
    label = _prop32_item4(shape, corrected) if item == 4 else _PROP32[item](shape)
    return label is not None, label
