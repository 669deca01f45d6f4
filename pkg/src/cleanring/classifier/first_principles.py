"""Classification from the block decomposition of O_p[G].

O_p[G] splits as a product over d | exp(G) of lambda(d) copies of
O_p[x]/(phi_d), and each block has deg(phi_d) / ord_d(N(p)) maximal ideals.
Clean blocks are the local ones; with 2 a unit, a block with two maximal
ideals is weakly (equivalently feebly) clean, and a product is weakly clean
only if at most one factor is not clean.
"""

from __future__ import annotations

from ..abelian import AbelianGroup, cyclic_subgroup_count
from ..base_rings import RATIONAL, BaseRing, local_cyclotomic_degree, residue_size
from ..ntheory import divisors, euler_phi, is_primitive_root, mult_order
from .report import FIRST_PRINCIPLES, ClassificationReport, CleannessClass, DivisorWitness


class PreconditionError(ValueError):
    """The inputs fall outside the hypotheses of the classification."""


def check_preconditions(R: BaseRing, G: AbelianGroup) -> None:
    n = G.exponent
    if n % R.p == 0:
        raise PreconditionError(f"p = {R.p} divides exp(G) = {n}")
    if R.p == 2 and R.kind != RATIONAL:
        raise PreconditionError("p = 2 is only supported over the rational base")


def divisor_witnesses(R: BaseRing, G: AbelianGroup) -> list[DivisorWitness]:
    norm = residue_size(R)
    rows = []
    for d in divisors(G.exponent):
        deg = local_cyclotomic_degree(R, d)
        f = mult_order(norm, d)
        t, rem = divmod(deg, f)
        if rem:
            raise ArithmeticError(f"ord_{d}(N) = {f} does not divide deg phi_{d} = {deg}")
        nu, rem = divmod(euler_phi(d), deg)
        if rem:
            raise ArithmeticError(f"deg phi_{d} = {deg} does not divide phi({d})")
        mu = cyclic_subgroup_count(G, d)
        rows.append(DivisorWitness(d, deg, f, t, mu, nu, mu * nu))
    return rows


def verdict_from_witnesses(witnesses: list[DivisorWitness], two_is_unit: bool = True) -> CleannessClass:
    counts = [w.max_ideals for w in witnesses]
    if all(t == 1 for t in counts):
        return CleannessClass.CLEAN
    if not two_is_unit or any(t > 2 for t in counts):
        return CleannessClass.NOT_FEEBLY_CLEAN
    if sum(w.lam for w in witnesses if w.max_ideals == 2) == 1:
        return CleannessClass.WEAKLY_CLEAN_NOT_CLEAN
    return CleannessClass.FEEBLY_CLEAN_NOT_WEAKLY_CLEAN


def classify_first_principles(R: BaseRing, G: AbelianGroup) -> ClassificationReport:
    check_preconditions(R, G)
    witnesses = divisor_witnesses(R, G)
    notes = []
    if R.p == 2:
        verdict = verdict_from_witnesses(witnesses, two_is_unit=False)
        assert verdict.is_clean == is_primitive_root(2, G.exponent)
        notes.append("p = 2: clean, weakly clean and feebly clean coincide")
    else:
        verdict = verdict_from_witnesses(witnesses)
    if G.is_trivial:
        notes.append("trivial group: outside the nontrivial-group hypothesis of the case lists")
    return ClassificationReport(R, G, verdict, FIRST_PRINCIPLES, witnesses, None, notes)
