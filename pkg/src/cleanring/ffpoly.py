"""Cyclotomic polynomials and distinct-degree factorization over F_p.

This module is an independent check on the orders used by the classifier:
Phi_d is built over Z by exact division, reduced mod p, and split into
equal-degree blocks by polynomial arithmetic alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ntheory import divisors, euler_phi, is_prime, moebius, mult_order


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def divmod_monic(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        if not other.coeffs or other.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return IntPoly(), IntPoly(tuple(rem))
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dq]))

    def mod(self, p: int) -> ModPoly:
        return ModPoly(p, tuple(c % p for c in self.coeffs))

    def __str__(self) -> str:
        return _format(self.coeffs)


def _format(coeffs) -> str:
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{c}{'*' if mono else ''}{mono}")
    return " + ".join(terms).replace("+ -", "- ")


@lru_cache(maxsize=1024)
def cyclotomic_polynomial(d: int) -> IntPoly:
    """Phi_d as the product of (x^e - 1)^moebius(d/e) over e | d."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    num, den = IntPoly((1,)), IntPoly((1,))
    for e in divisors(d):
        mu = moebius(d // e)
        if mu == 0:
            continue
        factor = IntPoly((-1,) + (0,) * (e - 1) + (1,))
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    quot, rem = num.divmod_monic(den)
    if rem.coeffs:
        raise ArithmeticError(f"inexact division building Phi_{d}")
    if quot.degree != euler_phi(d):
        raise ArithmeticError(f"Phi_{d} has degree {quot.degree}, expected {euler_phi(d)}")
    return quot


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over F_p, coefficients reduced into [0, p), ascending degree."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(c % self.p for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return f"{_format(self.coeffs)} (mod {self.p})"


# Raw coefficient-list arithmetic over F_p; lists are trimmed on output.

def _sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        a[i] = (a[i] - c) % p
    return list(_trim(a))


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return list(_trim(c % p for c in out))


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(rem) - 1 < db:
        return [], list(_trim(rem))
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % p
        if c:
            quot[i - db] = c
            for j, y in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * y) % p
    return list(_trim(quot)), list(_trim(rem[:db]))


def _monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    a, b = list(_trim(a)), list(_trim(b))
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p)


def _powmod(base, e, f, p):
    result = [1]
    base = _divmod(base, f, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), f, p)[1]
        base = _divmod(_mul(base, base, p), f, p)[1]
        e >>= 1
    return result


def _derivative(a, p):
    return list(_trim(i * c % p for i, c in enumerate(a))[1:]) if len(a) > 1 else []


def poly_gcd(f: ModPoly, g: ModPoly) -> ModPoly:
    if f.p != g.p:
        raise ValueError("moduli differ")
    return ModPoly(f.p, tuple(_gcd(f.coeffs, g.coeffs, f.p)))


def ddf_degrees(f: ModPoly) -> list[tuple[int, int]]:
    """Distinct-degree factorization of a squarefree polynomial.

    Returns ``(k, count)`` for each k such that f has ``count`` monic
    irreducible factors of degree k, in increasing k.
    """
    p = f.p
    if f.degree < 1:
        return []
    if len(_gcd(f.coeffs, _derivative(f.coeffs, p), p)) > 1:
        raise ValueError(f"{f} is not squarefree")
    rest = _monic(list(f.coeffs), p)
    x = [0, 1]
    h = x
    out = []
    k = 0
    while len(rest) - 1 >= 2 * (k + 1):
        k += 1
        h = _powmod(h, p, rest, p)
        g = _gcd(rest, _sub(h, x, p), p)
        if len(g) > 1:
            out.append((k, (len(g) - 1) // k))
            rest = _divmod(rest, g, p)[0]
            h = _divmod(h, rest, p)[1]
    if len(rest) > 1:
        out.append((len(rest) - 1, 1))
    return out


@dataclass(frozen=True)
class OracleRecord:
    d: int
    p: int
    expected_degree: int
    expected_count: int
    observed: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return self.observed == ((self.expected_degree, self.expected_count),)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "p": self.p,
            "expected_degree": self.expected_degree,
            "expected_count": self.expected_count,
            "observed": [list(t) for t in self.observed],
            "pass": self.passed,
        }


def verify_cyclotomic_factorization(d: int, p: int) -> OracleRecord:
    """Factor Phi_d mod p and compare with the degree ord_d(p) and count phi(d)/ord_d(p).

    Only the expected side uses :func:`mult_order`; the observed factor
    degrees come from polynomial arithmetic alone.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if d % p == 0:
        raise ValueError(f"p = {p} divides d = {d}")
    order = mult_order(p, d)
    observed = tuple(ddf_degrees(cyclotomic_polynomial(d).mod(p)))
    return OracleRecord(d, p, order, euler_phi(d) // order, observed)
