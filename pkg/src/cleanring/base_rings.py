"""Local base rings O_p over Q, Q(zeta_m) and Q(sqrt d).

A :class:`BaseRing` carries just enough to compute the residue field size
N(p) and the degree [K(zeta_d):K] of the local cyclotomic factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ntheory import euler_phi, factorize, is_prime, is_squarefree, legendre, lcm, mult_order

RATIONAL = "rational"
CYCLOTOMIC = "cyclotomic"
QUADRATIC = "quadratic"
KINDS = (RATIONAL, CYCLOTOMIC, QUADRATIC)


def discriminant(d: int) -> int:
    """Discriminant of Q(sqrt d) for squarefree d != 0, 1."""
    if d in (0, 1) or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and not 0 or 1, got {d}")
    return d if d % 4 == 1 else 4 * d


@dataclass(frozen=True)
class BaseRing:
    kind: str
    p: int
    m: int | None = None
    d: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown base kind {self.kind!r}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.p == 2 and self.kind != RATIONAL:
            raise ValueError(
                "p = 2 is only supported over the rational base; for cyclotomic and "
                "quadratic bases the p = 2 classification is outside this library"
            )
        if self.kind == CYCLOTOMIC:
            if self.m is None or self.m < 1:
                raise ValueError(f"cyclotomic base needs m >= 1, got {self.m}")
            if self.m % self.p == 0:
                raise ValueError(f"p = {self.p} divides m = {self.m}; the residue norm is only known for p not dividing m")
        if self.kind == QUADRATIC:
            if self.d is None:
                raise ValueError("quadratic base needs d")
            discriminant(self.d)

    @classmethod
    def rational(cls, p: int) -> BaseRing:
        return cls(RATIONAL, p)

    @classmethod
    def cyclotomic(cls, m: int, p: int) -> BaseRing:
        return cls(CYCLOTOMIC, p, m=m)

    @classmethod
    def quadratic(cls, d: int, p: int) -> BaseRing:
        return cls(QUADRATIC, p, d=d)

    @property
    def discriminant(self) -> int | None:
        return discriminant(self.d) if self.kind == QUADRATIC else None

    @property
    def legendre_delta(self) -> int | None:
        if self.kind != QUADRATIC:
            return None
        return legendre(self.discriminant, self.p)

    @property
    def param(self) -> int | None:
        return {RATIONAL: None, CYCLOTOMIC: self.m, QUADRATIC: self.d}[self.kind]

    def __str__(self) -> str:
        if self.kind == RATIONAL:
            return f"Q, p={self.p}"
        if self.kind == CYCLOTOMIC:
            return f"Q(zeta_{self.m}), p={self.p}"
        return f"Q(sqrt({self.d})), p={self.p}"

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "p": self.p}
        if self.kind == CYCLOTOMIC:
            out["m"] = self.m
        if self.kind == QUADRATIC:
            out["d"] = self.d
            out["discriminant"] = self.discriminant
            out["legendre_delta"] = self.legendre_delta
        return out

    @classmethod
    def from_dict(cls, data: dict) -> BaseRing:
        return cls(data["kind"], data["p"], m=data.get("m"), d=data.get("d"))


def coprime_split(n: int, m: int) -> tuple[int, int]:
    """(n1, n') with n1 the largest divisor of n prime to m and n' = lcm(m, n) / (m n1)."""
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got {n}, {m}")
    n1 = 1
    for q, k in factorize(n):
        if m % q:
            n1 *= q**k
    nprime, rem = divmod(lcm(m, n), m * n1)
    assert rem == 0
    return n1, nprime


def residue_size(R: BaseRing) -> int:
    """N(p) = |O/p|."""
    if R.kind == RATIONAL:
        return R.p
    if R.kind == CYCLOTOMIC:
        return R.p ** mult_order(R.p, R.m)
    return R.p if R.legendre_delta >= 0 else R.p**2


def local_cyclotomic_degree(R: BaseRing, d: int) -> int:
    """[K(zeta_d):K], the degree of every monic irreducible factor of Phi_d over O_p."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if R.kind == RATIONAL:
        return euler_phi(d)
    if R.kind == CYCLOTOMIC:
        d1, dprime = coprime_split(d, R.m)
        return dprime * euler_phi(d1)
    phi = euler_phi(d)
    if d % R.discriminant == 0:
        # Q(sqrt d) sits inside Q(zeta_d) exactly when the discriminant divides d
        if phi % 2:
            raise ArithmeticError(f"phi({d}) odd although the discriminant divides {d}")
        return phi // 2
    return phi


def cyclotomic_poly_irreducible(R: BaseRing, n: int) -> bool:
    return local_cyclotomic_degree(R, n) == euler_phi(n)
