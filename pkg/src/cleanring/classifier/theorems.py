"""Explicit case-list classification over Q, Q(zeta_m) and Q(sqrt d).

The lists are transcribed as stated, one predicate per sub-case, and are
meant to be checked against :mod:`.first_principles` rather than trusted.
Where a list is known to disagree with the block computation the
discrepancy is recorded in the ledger, not patched here; the one
exception is the rational weakly-clean list, which is read with the
hypothesis carried by its source (p = 3 mod 4 in the n = 4q case).

Verdict precedence for every list: clean condition, then the weakly
clean condition, then the feebly clean condition, else not feebly clean.
"""

from __future__ import annotations

from itertools import permutations
from math import gcd

from ..abelian import AbelianGroup, is_cyclic, splits_as
from ..base_rings import CYCLOTOMIC, QUADRATIC, RATIONAL, BaseRing, coprime_split, cyclotomic_poly_irreducible
from ..ntheory import divisors, euler_phi, is_prime, is_primitive_root, lcm, mult_order
from .first_principles import check_preconditions, divisor_witnesses
from .props import Shape, exact_div, gcd_is, phe, prop32_item
from .report import THEOREM, ClassificationReport, CleannessClass

C = CleannessClass


def _first(cases):
    for label, test in cases:
        if test():
            return label
    return None


# -- rational base -----------------------------------------------------------

def _thm1(p: int, G: AbelianGroup) -> tuple[CleannessClass, str]:
    n = G.exponent
    if is_primitive_root(p, n):
        return C.CLEAN, "thm1.1"
    if is_cyclic(G):
        # same four shapes as the rational list; the n = 4q shape carries p = 3 (mod 4)
        holds, label = prop32_item(n, p, 2)
        if holds:
            return C.WEAKLY_CLEAN_NOT_CLEAN, "thm1.3" + label[1:]
    if euler_phi(n) == 2 * mult_order(p, n):
        return C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN, "thm1.2"
    return C.NOT_FEEBLY_CLEAN, "thm1.none"


def _p2(G: AbelianGroup) -> tuple[CleannessClass, str]:
    if is_primitive_root(2, G.exponent):
        return C.CLEAN, "p2.primitive-root"
    return C.NOT_FEEBLY_CLEAN, "p2.none"


# -- cyclotomic base ---------------------------------------------------------

def _main1(R: BaseRing, G: AbelianGroup, notes: list[str]) -> tuple[CleannessClass, str]:
    p, m, n = R.p, R.m, G.exponent
    o = lambda k: mult_order(p, k)  # noqa: E731
    n1, nprime = coprime_split(n, m)
    on1, onm, om = o(n1), o(nprime * m), o(m)
    lhs = nprime * euler_phi(n1) * om
    if lhs == lcm(onm, on1):
        return C.CLEAN, "main1.1"

    cond_a = on1 == euler_phi(n1) and onm == nprime * om and gcd(on1, onm) == 2
    cond_b = 2 * on1 == euler_phi(n1) and onm == nprime * om and gcd(on1, onm) == 1
    cond_c = on1 == euler_phi(n1) and 2 * onm == nprime * om and gcd(on1, onm) == 1

    proper = [d for d in divisors(n) if d != n]
    split = {d: coprime_split(d, m) for d in proper}
    if is_cyclic(G) and cyclotomic_poly_irreducible(R, n):
        weak = _first([
            ("main1.3a", lambda: cond_a and all(gcd(o(d1), o(dp * m)) == 1 for d1, dp in split.values())),
            ("main1.3b", lambda: cond_b and all(o(d1) == euler_phi(d1) for d1, _ in split.values())),
            ("main1.3c", lambda: on1 == euler_phi(n1) and nprime == 2 and o(2 * m) == om and gcd(on1, om) == 1),
        ])
        if weak:
            return C.WEAKLY_CLEAN_NOT_CLEAN, weak

    feeble = _first([("main1.2a", lambda: cond_a), ("main1.2b", lambda: cond_b), ("main1.2c", lambda: cond_c)])
    by_equation = lhs == 2 * lcm(onm, on1)
    if by_equation != (feeble is not None):
        notes.append(
            f"main1(2): the order equation gives {by_equation} but the sub-case list gives {feeble is not None}"
        )
    if feeble:
        return C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN, feeble
    return C.NOT_FEEBLY_CLEAN, "main1.none"


# -- quadratic base ----------------------------------------------------------

class _Quad:
    def __init__(self, R: BaseRing, G: AbelianGroup):
        self.R, self.G = R, G
        self.p, self.d, self.D = R.p, R.d, R.discriminant
        self.e = G.exponent
        self.s = Shape(self.e, self.p)
        self.ord_e = mult_order(self.p, self.e)
        self.phi_e = euler_phi(self.e)

    def pm(self, q: int) -> bool:
        """d = +-q = 1 (mod 4)."""
        return abs(self.d) == q and self.d % 4 == 1

    def two(self) -> bool:
        """|Delta| = 8 and d = +-2."""
        return abs(self.D) == 8 and self.d in (2, -2)

    def one_odd(self, twos=(0, 1)):
        return self.s.odd[0] if self.s.odd_count(1, twos) else None

    def pairs(self, twos=(0, 1)):
        return list(permutations(self.s.odd)) if self.s.odd_count(2, twos) else []

    def triples(self):
        return list(permutations(self.s.odd)) if self.s.odd_count(3, (0, 1)) else []

    def irreducible(self, k: int) -> bool:
        return cyclotomic_poly_irreducible(self.R, k)


def _any_pair(Q: _Quad, test, twos=(0, 1)) -> bool:
    return any(test(a, b) for a, b in Q.pairs(twos))


def _main2_case1(Q: _Quad) -> tuple[CleannessClass, str]:
    s, p, e, leg = Q.s, Q.p, Q.e, Q.R.legendre_delta
    split = leg >= 0
    clean = _first([
        ("main2.1.a.i", lambda: Q.phi_e == Q.ord_e and split),
        ("main2.1.a.ii", lambda: e == 2 and leg == -1),
    ])
    if clean:
        return C.CLEAN, clean

    if is_cyclic(Q.G) and Q.irreducible(e):
        def rational_weak():
            if not split:
                return None
            return _first([
                ("main2.1.c.i", lambda: (e == 4 and p % 4 == 1) or (e == 8 and p % 4 == 3)),
                ("main2.1.c.ii", lambda: is_prime(e) and e > 2 and 2 * Q.ord_e == e - 1),
                ("main2.1.c.iii", lambda: e % 4 == 0 and is_prime(e // 4) and e // 4 > 2 and s.pr(e // 4, 1)),
                ("main2.1.c.iv", lambda: _two_primes_primitive(s)),
            ])
        weak = "main2.1.c.exp4" if (e == 4 and leg == -1) else rational_weak()
        if weak:
            return C.WEAKLY_CLEAN_NOT_CLEAN, weak

    feeble = _first([
        ("main2.1.b.i", lambda: Q.phi_e == 2 * Q.ord_e and split),
        ("main2.1.b.ii", lambda: Q.phi_e == 2 * Q.ord_e and Q.ord_e % 2 == 1 and leg == -1),
        ("main2.1.b.iii", lambda: e != 2 and Q.phi_e == Q.ord_e and leg == -1),
    ])
    if feeble:
        return C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN, feeble
    return C.NOT_FEEBLY_CLEAN, "main2.1.none"


def _two_primes_primitive(s: Shape) -> bool:
    n = s.n
    primes = [q for q in divisors(n) if is_prime(q)]
    if len(primes) != 2 or primes[0] * primes[1] != n:
        return False
    q1, q2 = primes
    return s.pr(q1, 1) and s.pr(q2, 1) and gcd(q1 - 1, q2 - 1) == 2


def _main2_case2_clean(Q: _Quad) -> str | None:
    s, p, d, D, e = Q.s, Q.p, Q.d, Q.D, Q.e

    def iii():
        x = Q.one_odd()
        return x is not None and abs(D) == x[0] and Q.pm(x[0]) and s.half(*x)

    def iv():
        x = Q.one_odd((2,))
        return x is not None and abs(D) == x[0] and d == -x[0] and d % 4 == 1 and p % 4 == 3 and s.half(*x)

    def v():
        x = Q.one_odd((2,))
        if x is None:
            return False
        q, r = x
        return abs(D) == 4 * q and abs(d) == q and d % 4 == 3 and p % 4 == 3 and s.pr(q, r)

    def vi():
        return _any_pair(Q, lambda a, b: (
            abs(D) == b[0] and d == -b[0] and d % 4 == 1
            and s.pr(*a) and s.half(*b) and gcd(phe(*a), phe(*b)) == 2
        ))

    def vii():
        return _any_pair(Q, lambda a, b: (
            abs(D) == a[0] * b[0] and Q.pm(a[0] * b[0])
            and s.pr(*a) and s.pr(*b) and gcd(phe(*a), phe(*b)) == 2
        ))

    return _first([
        ("main2.2.a.i", lambda: e == abs(D) == 8 and d in (2, -2) and p % 4 == 3),
        ("main2.2.a.ii", lambda: not s.odd and s.t >= 4 and Q.two() and p % 16 in (3, 11)),
        ("main2.2.a.iii", iii),
        ("main2.2.a.iv", iv),
        ("main2.2.a.v", v),
        ("main2.2.a.vi", vi),
        ("main2.2.a.vii", vii),
    ])


def _main2_case2_weak(Q: _Quad) -> str | None:
    s, p, d, D, e, G = Q.s, Q.p, Q.d, Q.D, Q.e, Q.G

    def i():
        return (
            not s.odd and s.t >= 3 and Q.two() and p % 8 == 5
            and is_cyclic(G) and Q.irreducible(4)
        )

    def ii():
        x = Q.one_odd((2,))
        if x is None:
            return False
        q, r = x
        return (
            abs(D) == 4 * q and abs(d) == q and d % 4 == 3 and p % 4 == 1 and s.pr(q, r)
            and splits_as(G, 4, 2, q) and Q.irreducible(4)
        )

    def iii():
        def test(a, b):
            (q1, r1), (q2, r2) = a, b
            return (
                r2 == 1 and abs(D) == q1 * q2 and Q.pm(q1 * q2) and s.pr(q1, r1)
                and 2 * s.ordp(q2) == q2 - 1 and gcd(phe(q1, r1), q2 - 1) == 2
                and splits_as(G, q2, q2, q1) and Q.irreducible(q2)
            )
        return _any_pair(Q, test)

    def iv(k: int):
        if not (is_cyclic(G) and Q.irreducible(e)):
            return False
        f = lambda q: s.ordp(q)  # noqa: E731
        odd = [q for q, r in s.odd if r == 1] if all(r == 1 for _, r in s.odd) else []
        if k == 1:
            return s.t == 0 and len(odd) == 1 and e % 4 == 1 and D == d == e and 4 * f(e) == e - 1
        if k == 2:
            return (
                s.t == 0 and len(odd) == 2 and D == d == e and all(q % 4 == 1 for q in odd)
                and all(f(q) == q - 1 for q in odd) and gcd(odd[0] - 1, odd[1] - 1) == 4
            )
        if k == 3:
            return e == 8 and Q.two() and p % 16 in (7, 15)
        if k == 4:
            return s.t == 0 and len(odd) == 2 and any(
                abs(D) == q1 and Q.pm(q1) and f(q2) == q2 - 1 and 2 * f(q1) == q1 - 1
                and gcd((q1 - 1) // 2, q2 - 1) == 2
                for q1, q2 in permutations(odd)
            )
        # k == 5
        return (
            s.t == 2 and len(odd) == 1 and abs(D) == odd[0] == d and d % 4 == 1
            and p % 4 == 3 and 2 * f(odd[0]) == odd[0] - 1
        )

    return _first([
        ("main2.2.c.i", i),
        ("main2.2.c.ii", ii),
        ("main2.2.c.iii", iii),
        *((f"main2.2.c.iv.{k}", (lambda k=k: iv(k))) for k in range(1, 6)),
    ])


def _main2_case2_feeble(Q: _Quad) -> str | None:
    s, p, d, D, e = Q.s, Q.p, Q.d, Q.D, Q.e
    aD = abs(D)

    def iii():
        x = Q.one_odd()
        return x is not None and x[0] % 4 == 1 and D == d == x[0] and s.quarter(*x)

    def iv(k: int):
        def test(a, b):
            (q1, _), (q2, _) = a, b
            f1, f2 = phe(*a), phe(*b)
            trio = (q1, q2, q1 * q2)
            if k == 1:
                return s.pr(*a) and s.pr(*b) and gcd(f1, f2) == 4 and D == d and d in trio
            if k == 2:
                return (
                    s.pr(*a) and s.half(*b) and gcd_is(f1, exact_div(f2, 2), 2)
                    and aD in trio and d == D and d % 4 == 1
                )
            if k == 3:
                return (
                    s.half(*a) and s.half(*b) and gcd_is(exact_div(f1, 2), exact_div(f2, 2), 1)
                    and aD in trio and d == D and d % 4 == 1
                )
            return s.pr(*a) and s.quarter(*b) and gcd_is(f1, exact_div(f2, 4), 1) and d == D == q2
        return _any_pair(Q, test)

    def v(k: int):
        for a, b, c in Q.triples():
            qs = (a[0], b[0], c[0])
            fs = [phe(*x, False) for x in (a, b, c)]
            if not all(gcd(fs[i], fs[j]) == 2 for i, j in ((0, 1), (0, 2), (1, 2))):
                continue
            products = {qs[0], qs[1], qs[2], qs[0] * qs[1], qs[0] * qs[2], qs[1] * qs[2], qs[0] * qs[1] * qs[2]}
            odd_half = lambda x: s.half(*x, False) and s.ordp(x[0] ** x[1]) % 2 == 1  # noqa: E731
            pr = lambda x: s.pr(*x, False)  # noqa: E731
            if k == 1 and pr(a) and pr(b) and pr(c) and aD in products and d == D and d % 4 == 1:
                return True
            if k == 2 and pr(a) and pr(b) and odd_half(c) and aD in products and d == D and d % 4 == 1:
                return True
            if k == 3 and pr(a) and odd_half(b) and odd_half(c) and d == D and d in (-qs[1], -qs[2], qs[1] * qs[2]):
                return True
        return False

    def vi(k: int):
        x = Q.one_odd((2,))
        if x is None:
            return False
        q, r = x
        half = s.half(q, r, False)
        if k == 1:
            return p % 4 == 1 and half and (
                (d == D and abs(d) == q and d % 4 == 1) or (4 * d == D and abs(d) == q and d % 4 == 3)
            )
        if k == 2:
            return p % 4 == 3 and q % 4 == 1 and half and ((d == D == q) or (4 * d == D and d == -q))
        return p % 4 == 3 and q % 8 == 5 and s.quarter(q, r, False) and d == D == q

    def vii(k: int):
        def test(a, b):
            (q1, r1), (q2, r2) = a, b
            if q2 % 4 != 3:
                return False
            six = (q1, q2, 4 * q1, 4 * q2, q1 * q2, 4 * q1 * q2)
            g2 = gcd(phe(*a), phe(*b)) == 2
            if k == 1:
                return g2 and s.pr(*a) and s.pr(*b) and aD in six and (
                    (d == D and d % 4 == 1) or (4 * d == D and d % 4 == 3)
                )
            if k == 2:
                return g2 and s.pr(*a) and s.half(*b) and (
                    (p % 4 == 3 and aD in six) or (p % 4 == 1 and aD in (q2, 4 * q2))
                )
            return (
                p % 4 == 3 and q1 % 4 == 3 and s.half(*a, False) and s.half(*b, False)
                and gcd(phe(*a, False) // 2, phe(*b, False) // 2) == 1
                and d == D and d in (-q1, -q2, q1 * q2)
            )
        return _any_pair(Q, test, (2,))

    def viii(k: int):
        x = Q.one_odd((3,))
        if x is None:
            return False
        q, r = x
        if k == 1:
            return s.pr(q, r, False) and (
                (p % 8 == 1 and d in (2, -2) and D == 4 * d) or (p % 8 != 1 and aD in (q, 4 * q, 8))
            )
        return q % 4 == 3 and s.half(q, r, False) and (
            (p % 8 == 5 and D in (4 * q, -q)) or (p % 4 != 1 and D in (-q, 4 * q, 8, -8))
        )

    def ix():
        if len(s.odd) != 1 or s.t < 4:
            return False
        q, r = s.odd[0]
        return (
            q % 4 == 3 and p % 16 in (3, 5, 11, 13) and aD in (8, q, 4 * q)
            and (s.pr(q, r, False) or s.half(q, r, False))
        )

    return _first([
        ("main2.2.b.half", lambda: 2 * Q.ord_e == Q.phi_e),
        ("main2.2.b.i", lambda: e == aD == 8 and d in (2, -2) and p % 8 == 1),
        ("main2.2.b.ii", lambda: not s.odd and s.t >= 4 and Q.two() and p % 16 == 9),
        ("main2.2.b.iii", iii),
        *((f"main2.2.b.iv.{k}", (lambda k=k: iv(k))) for k in range(1, 5)),
        *((f"main2.2.b.v.{k}", (lambda k=k: v(k))) for k in range(1, 4)),
        *((f"main2.2.b.vi.{k}", (lambda k=k: vi(k))) for k in range(1, 4)),
        *((f"main2.2.b.vii.{k}", (lambda k=k: vii(k))) for k in range(1, 4)),
        *((f"main2.2.b.viii.{k}", (lambda k=k: viii(k))) for k in range(1, 3)),
        ("main2.2.b.ix", ix),
    ])


def _main2_case3_clean(Q: _Quad) -> str | None:
    x = Q.one_odd()
    if x is None:
        return None
    q, r = x
    if abs(Q.D) == q and Q.pm(q) and (Q.s.pr(q, r) or (q % 4 == 3 and Q.s.half(q, r))):
        return "main2.3.a"
    return None


def _main2_case3_weak(Q: _Quad) -> str | None:
    e = Q.e
    if not (is_prime(e) and e > 2 and is_cyclic(Q.G) and Q.irreducible(e)):
        return None
    o = Q.ord_e
    if abs(Q.D) == e and Q.d == e and e % 4 == 1 and ((4 * o == e - 1 and o % 2 == 1) or 2 * o == e - 1):
        return "main2.3.c"
    return None


def _main2_case3_feeble(Q: _Quad) -> str | None:
    s, p, d, D, e = Q.s, Q.p, Q.d, Q.D, Q.e

    def qr(mod4=None, mod8=None):
        x = Q.one_odd()
        if x is None:
            return None
        if mod4 is not None and x[0] % 4 != mod4:
            return None
        if mod8 is not None and x[0] % 8 != mod8:
            return None
        return x

    def four_q():
        return Q.one_odd((2,))

    def alt(q, r):
        return s.pr(q, r) or (p % 4 == 3 and q % 4 == 3 and s.half(q, r))

    def v():
        x = four_q()
        return x is not None and abs(D) == x[0] and Q.pm(x[0]) and alt(*x)

    def vi():
        x = four_q()
        return x is not None and abs(D) == 4 * x[0] and abs(d) == x[0] and d % 4 == 3 and alt(*x)

    def vii():
        x = four_q()
        return x is not None and D == d == -x[0] and d % 4 == 1 and p % 4 == 1 and s.half(*x)

    def viii():
        x = four_q()
        return x is not None and D == 4 * x[0] and d == x[0] and d % 4 == 3 and p % 4 == 1 and s.half(*x)

    def ix():
        def test(a, b):
            (q1, _), (q2, _) = a, b
            return (
                q2 % 4 == 3 and gcd(phe(*a), phe(*b)) == 2
                and abs(D) == abs(d) and abs(d) in (q1, q2, q1 * q2) and d % 4 == 1
                and s.pr(*a) and (s.pr(*b) or s.half(*b))
            )
        return _any_pair(Q, test)

    def x_():
        def test(a, b):
            (q1, _), (q2, _) = a, b
            if q1 % 4 != 3 or q2 % 4 != 3:
                return False
            f1, f2 = phe(*a, False), phe(*b, False)
            first = s.pr(*a) and s.half(*b, False) and gcd(f1, f2 // 2) == 1
            second = s.half(*a, False) and s.half(*b, False) and gcd(f1 // 2, f2 // 2) == 1
            return (first or second) and abs(D) == abs(d) and abs(d) in (q1, q2, q1 * q2) and d % 4 == 1
        return _any_pair(Q, test)

    def iii():
        x = qr(mod4=1)
        return x is not None and D == d == x[0] and s.half(*x)

    def iv():
        x = qr(mod8=5)
        return x is not None and D == d == x[0] and s.quarter(*x)

    return _first([
        ("main2.3.b.prim", lambda: Q.ord_e == Q.phi_e and e >= 3),
        ("main2.3.b.half-odd", lambda: 2 * Q.ord_e == Q.phi_e and Q.ord_e % 2 == 1),
        ("main2.3.b.i", lambda: e == 8 and Q.two()),
        ("main2.3.b.ii", lambda: not s.odd and s.t >= 4 and Q.two() and p % 16 in (3, 5, 11, 13)),
        ("main2.3.b.iii", iii),
        ("main2.3.b.iv", iv),
        ("main2.3.b.v", v),
        ("main2.3.b.vi", vi),
        ("main2.3.b.vii", vii),
        ("main2.3.b.viii", viii),
        ("main2.3.b.ix", ix),
        ("main2.3.b.x", x_),
    ])


def _main2(R: BaseRing, G: AbelianGroup) -> tuple[CleannessClass, str]:
    Q = _Quad(R, G)
    if Q.e % Q.D != 0:
        return _main2_case1(Q)
    if R.legendre_delta >= 0:
        clean, weak, feeble, region = _main2_case2_clean, _main2_case2_weak, _main2_case2_feeble, "main2.2"
    else:
        clean, weak, feeble, region = _main2_case3_clean, _main2_case3_weak, _main2_case3_feeble, "main2.3"
    # in these two cases the feebly clean list includes the clean rings
    label = clean(Q)
    if label:
        return C.CLEAN, label
    label = weak(Q)
    if label:
        return C.WEAKLY_CLEAN_NOT_CLEAN, label
    label = feeble(Q)
    if label:
        return C.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN, label
    return C.NOT_FEEBLY_CLEAN, f"{region}.none"


def classify_theorem(R: BaseRing, G: AbelianGroup) -> ClassificationReport:
    check_preconditions(R, G)
    witnesses = divisor_witnesses(R, G)
    notes: list[str] = []
    if G.is_trivial:
        notes.append("trivial group: outside the nontrivial-group hypothesis of the case lists")
        return ClassificationReport(R, G, C.CLEAN, THEOREM, witnesses, "trivial-group", notes)
    if R.p == 2:
        verdict, label = _p2(G)
    elif R.kind == RATIONAL:
        verdict, label = _thm1(R.p, G)
    elif R.kind == CYCLOTOMIC and R.m in (1, 2):
        # Q(zeta_1) = Q(zeta_2) = Q
        verdict, label = _thm1(R.p, G)
        lit_verdict, lit_label = _main1(R, G, [])
        notes.append(f"reduced to the rational list; the cyclotomic list gives {lit_verdict.label} ({lit_label})")
    elif R.kind == CYCLOTOMIC:
        verdict, label = _main1(R, G, notes)
    elif R.kind == QUADRATIC:
        verdict, label = _main2(R, G)
    else:  # pragma: no cover
        raise ValueError(f"unknown base kind {R.kind!r}")
    return ClassificationReport(R, G, verdict, THEOREM, witnesses, label, notes)
