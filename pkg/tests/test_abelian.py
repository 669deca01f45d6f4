from itertools import product
from math import gcd, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cleanring.abelian import (
    AbelianGroup,
    cyclic,
    cyclic_subgroup_count,
    exact_order_count,
    is_cyclic,
    is_q_group,
    normalize,
    parse_group,
    splits_as,
)
from cleanring.ntheory import divisors, euler_phi


def all_groups_up_to(limit):
    """Every group of order <= limit, as invariant-factor tuples."""
    out = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for fs in frontier:
            order = prod(fs)
            start = fs[-1] if fs else 2
            for f in range(start, limit // order + 1):
                if fs and f % fs[-1]:
                    continue
                new = fs + (f,)
                if new not in out:
                    out.add(new)
                    nxt.append(new)
        frontier = nxt
    return [AbelianGroup(fs) for fs in sorted(out)]


def lcm_order(x, fs):
    o = 1
    for f, xi in zip(fs, x):
        k = f // gcd(f, xi)
        o = o * k // gcd(o, k)
    return o


def element_orders(G):
    fs = G.invariant_factors
    for x in product(*(range(f) for f in fs)):
        yield lcm_order(x, fs)


def brute_cyclic_subgroups(G, d):
    """Distinct cyclic subgroups of order d, enumerated as generated sets."""
    fs = G.invariant_factors
    seen = set()
    for x in product(*(range(f) for f in fs)):
        if lcm_order(x, fs) != d:
            continue
        sub = frozenset(tuple(k * xi % f for xi, f in zip(x, fs)) for k in range(d))
        seen.add(sub)
    return len(seen)


def test_normalize_examples():
    assert normalize([1]).invariant_factors == ()
    assert normalize([1]).exponent == 1
    assert normalize([2, 3]).invariant_factors == (6,)
    assert normalize([4, 6]).invariant_factors == (2, 12)
    with pytest.raises(ValueError):
        normalize([0])


@given(st.lists(st.integers(1, 60), max_size=4))
def test_normalize_idempotent_and_order(orders):
    G = normalize(orders)
    assert normalize(list(G.invariant_factors)) == G
    assert G.order == prod(orders)


@given(st.integers(1, 200), st.integers(1, 200))
def test_normalize_coprime_merge(a, b):
    if gcd(a, b) == 1 and a * b > 1:
        assert normalize([a, b]).invariant_factors == (a * b,)


def test_invariant_factor_validation():
    with pytest.raises(ValueError):
        AbelianGroup((2, 3))
    with pytest.raises(ValueError):
        AbelianGroup((1, 4))


def test_is_cyclic():
    assert is_cyclic(normalize([1]))
    assert not is_cyclic(AbelianGroup((2, 12)))
    assert is_cyclic(cyclic(35))


def test_parse_group():
    assert parse_group("4,6").invariant_factors == (2, 12)
    assert parse_group(" 5 ").invariant_factors == (5,)
    for bad in ("", "a,2", ",", "0"):
        with pytest.raises(ValueError):
            parse_group(bad)


def test_subgroup_count_examples():
    for n in (1, 7, 12, 60):
        assert all(cyclic_subgroup_count(cyclic(n), d) == 1 for d in divisors(n))
    assert cyclic_subgroup_count(normalize([11, 11]), 11) == 12
    assert cyclic_subgroup_count(cyclic(12), 5) == 0
    assert cyclic_subgroup_count(normalize([4, 6]), 8) == 0


def test_element_counts_match_enumeration():
    for G in all_groups_up_to(200):
        counts = {}
        for o in element_orders(G):
            counts[o] = counts.get(o, 0) + 1
        for d in divisors(G.order):
            assert exact_order_count(G, d) == counts.get(d, 0), (G, d)
            if G.exponent % d == 0:
                assert cyclic_subgroup_count(G, d) * euler_phi(d) == counts.get(d, 0)
        assert sum(exact_order_count(G, d) for d in divisors(G.order)) == G.order


def test_subgroup_count_matches_subgroup_enumeration():
    for G in all_groups_up_to(72):
        for d in divisors(G.exponent):
            assert cyclic_subgroup_count(G, d) == brute_cyclic_subgroups(G, d), (G, d)
    assert brute_cyclic_subgroups(normalize([11, 11]), 11) == 12


def test_structure_predicates():
    G = normalize([4, 3, 9])
    assert splits_as(G, 4, 2, 3)
    assert not splits_as(normalize([2, 2, 3]), 4, 2, 3)
    assert not splits_as(normalize([4, 3, 5]), 4, 2, 3)
    assert splits_as(normalize([5, 9]), 5, 5, 3)
    assert is_q_group(normalize([3, 9]), 3)
    assert not is_q_group(cyclic(6), 3)
    assert str(normalize([4, 6])) == "C2+C12"
    assert str(normalize([])) == "C1"


def test_group_count_sanity():
    # number of abelian groups of order 16 and 72
    groups = all_groups_up_to(72)
    assert sum(1 for G in groups if G.order == 16) == 5
    assert sum(1 for G in groups if G.order == 72) == 6
    assert len({G for G in groups}) == len(groups)
