import itertools

from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from configlab.permgroup import PermGroup, cycles, identity, inverse, mul, perm_order


def _cycle(n, *pts):
    p = list(range(n))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        p[a] = b
    return tuple(p)


def test_symmetric_and_cyclic_orders():
    for n in range(1, 8):
        gens = [_cycle(n, *range(n))] + ([_cycle(n, 0, 1)] if n > 1 else [])
        assert PermGroup(n, gens).order() == len(list(itertools.permutations(range(n))))
    assert PermGroup(10, [_cycle(10, *range(10))]).order() == 10


def test_mathieu_11():
    a = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0)
    b = [0] * 11
    for c in ((2, 6, 10, 7), (3, 9, 4, 5)):
        for x, y in zip(c, c[1:] + c[:1]):
            b[x] = y
    for x in range(11):
        if x not in (2, 6, 10, 7, 3, 9, 4, 5):
            b[x] = x
    g = PermGroup(11, [a, tuple(b)])
    assert g.order() == 7920
    assert len(set(g.elements())) == 7920


def test_membership():
    g = PermGroup(4, [_cycle(4, 0, 1, 2, 3)])
    assert _cycle(4, 0, 2) not in g
    assert mul(_cycle(4, 0, 1, 2, 3), _cycle(4, 0, 1, 2, 3)) in g
    assert g.is_transitive(range(4))
    assert g.orbit(0) == [0, 1, 2, 3]
    assert PermGroup(4, [_cycle(4, 0, 1)]).orbits() == [[0, 1], [2], [3]]


def test_helpers():
    p = _cycle(5, 0, 1, 2)
    assert perm_order(p) == 3
    assert mul(p, inverse(p)) == identity(5)
    assert cycles(p) == [(0, 1, 2)]


perms6 = st.permutations(list(range(6))).map(tuple)


@settings(max_examples=40, deadline=None)
@given(st.lists(perms6, min_size=1, max_size=3))
def test_order_matches_sympy(gens):
    ours = PermGroup(6, gens)
    ref = PermutationGroup([Permutation(list(g)) for g in gens])
    assert ours.order() == ref.order()
    for g in gens:
        assert g in ours


@settings(max_examples=30, deadline=None)
@given(st.lists(perms6, min_size=1, max_size=3), perms6)
def test_membership_matches_sympy(gens, h):
    ours = PermGroup(6, gens)
    ref = PermutationGroup([Permutation(list(g)) for g in gens])
    assert (h in ours) == ref.contains(Permutation(list(h)))


@settings(max_examples=30, deadline=None)
@given(st.lists(perms6, min_size=1, max_size=3))
def test_order_is_product_of_basic_orbits(gens):
    g = PermGroup(6, gens)
    prod = 1
    for n in g.basic_orbit_lengths():
        prod *= n
    assert prod == g.order()
