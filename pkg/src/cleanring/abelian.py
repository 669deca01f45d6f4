"""Finite abelian groups in invariant-factor form."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .ntheory import divisors, euler_phi, factorize, moebius


@dataclass(frozen=True)
class AbelianGroup:
    """C_{f1} + ... + C_{fk} with f1 | f2 | ... | fk, every fi >= 2."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError(f"invariant factors must be >= 2: {fs}")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must divide each other: {fs}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def sylow(self, q: int) -> AbelianGroup:
        """The q-primary component."""
        return normalize([q ** factorize(f).exponent(q) for f in self.invariant_factors])

    def primes(self) -> tuple[int, ...]:
        return factorize(self.order).primes

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "C1"
        return "+".join(f"C{f}" for f in self.invariant_factors)


def normalize(orders) -> AbelianGroup:
    """Invariant-factor form of the direct sum of cyclic groups of the given orders."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        if n < 1:
            raise ValueError(f"cyclic orders must be positive, got {n}")
        for q, k in factorize(n):
            by_prime.setdefault(q, []).append(q**k)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, qk in enumerate(powers):
            factors[i] *= qk
    return AbelianGroup(tuple(reversed(factors)))


def cyclic(n: int) -> AbelianGroup:
    return normalize([n])


def parse_group(text: str) -> AbelianGroup:
    """Parse the comma-separated cyclic orders syntax, e.g. ``"4,6"``."""
    parts = [t.strip() for t in text.split(",") if t.strip()]
    if not parts:
        raise ValueError(f"empty group specification: {text!r}")
    try:
        orders = [int(t) for t in parts]
    except ValueError:
        raise ValueError(f"bad group specification: {text!r}") from None
    return normalize(orders)


def is_cyclic(G: AbelianGroup) -> bool:
    return len(G.invariant_factors) <= 1


def exact_order_count(G: AbelianGroup, d: int) -> int:
    """Number of elements of exact order d (Moebius inversion over d | e)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return sum(
        moebius(d // e) * prod(gcd(e, f) for f in G.invariant_factors)
        for e in divisors(d)
    )


def cyclic_subgroup_count(G: AbelianGroup, d: int) -> int:
    """mu(d): the number of cyclic subgroups of G of order d."""
    if G.exponent % d:
        return 0
    count, rem = divmod(exact_order_count(G, d), euler_phi(d))
    if rem:
        raise ArithmeticError(f"element count of order {d} in {G} not divisible by phi({d})")
    return count


def is_q_group(G: AbelianGroup, q: int) -> bool:
    return all(p == q for p in G.primes())


def splits_as(G: AbelianGroup, cyclic_order: int, q: int, complement_prime: int) -> bool:
    """Whether G = C_{cyclic_order} + H with H a ``complement_prime``-group.

    ``q`` is the prime of ``cyclic_order``: the q-part of G must be exactly
    C_{cyclic_order} and every other prime dividing |G| must be
    ``complement_prime``.
    """
    if G.sylow(q).invariant_factors != (cyclic_order,):
        return False
    return all(r in (q, complement_prime) for r in G.primes())
