import pytest

from configlab.catalog import (
    CATALOG,
    GOLDEN,
    HESSE_SALMON_TRIPLES,
    ceva,
    ceva_realize,
    complete_configuration,
    cyclic_subgroups,
    desargues,
    desargues_realize,
    golden,
    hesse_salmon,
    modular_config,
    modular_cosets,
    reye,
    reye_realization,
    s_formula,
)
from configlab.errors import DegeneratePlane, InvalidN, InvalidV, NOutOfRange, RootsUnavailable
from configlab.incidence import dual, is_lineal, s_equivalence_classes, validate_tactical
from configlab.symmetry import is_isomorphic


def _all_subgroups_of_order(N):
    """Every subgroup of (Z/N)^2 of order N, found as closures of element pairs."""
    elems = [(a, b) for a in range(N) for b in range(N)]
    found = set()
    for g in elems:
        for h in elems:
            sub = {(0, 0)}
            frontier = [(0, 0)]
            while frontier:
                x = frontier.pop()
                for y in (g, h):
                    z = ((x[0] + y[0]) % N, (x[1] + y[1]) % N)
                    if z not in sub:
                        sub.add(z)
                        frontier.append(z)
            if len(sub) == N:
                found.add(frozenset(sub))
    return found


def _is_cyclic(sub, N):
    for a, b in sub:
        k, x, y = 1, a, b
        while (x, y) != (0, 0):
            x, y, k = (x + a) % N, (y + b) % N, k + 1
        if k == N:
            return True
    return False


@pytest.mark.parametrize("N", range(2, 13))
def test_subgroup_count_matches_formula(N):
    subs = cyclic_subgroups(N)
    brute = {s for s in _all_subgroups_of_order(N) if _is_cyclic(s, N)}
    assert {frozenset(s) for s in subs} == brute
    assert len(subs) == s_formula(N)


def test_noncyclic_subgroups_exist_for_composite():
    # the Klein subgroup of (Z/4)^2 is why only cyclic subgroups are counted
    all4 = _all_subgroups_of_order(4)
    assert len(all4) == 7 and s_formula(4) == 6


def test_s_formula_values():
    assert [s_formula(N) for N in range(2, 13)] == [3, 4, 6, 6, 12, 8, 12, 12, 18, 12, 24]


@pytest.mark.parametrize("N", range(2, 13))
def test_modular_parameters(N):
    p = validate_tactical(modular_config(N))
    s = s_formula(N)
    assert p.as_tuple() == (N * s, N, N * N, s)


def test_modular_cosets_partition():
    system = modular_cosets(4)
    for h in range(len(system.subgroups)):
        elems = [e for c, owner in system.cosets if owner == h for e in c]
        assert sorted(elems) == sorted((a, b) for a in range(4) for b in range(4))
    with pytest.raises(NOutOfRange):
        modular_config(13)


def test_modular_three_dual_is_hesse():
    assert validate_tactical(dual(modular_config(3))).as_tuple() == (9, 4, 12, 3)
    assert is_isomorphic(dual(modular_config(3)), golden("hesse"))


@pytest.mark.parametrize("n", range(2, 7))
def test_ceva_parameters(n):
    assert validate_tactical(ceva(n)).as_tuple() == (n * n, 3, 3 * n, n)


def test_ceva_three():
    assert is_isomorphic(ceva(3), golden("brianchon"))
    assert s_equivalence_classes(ceva(3))[1] == [3, 3, 3]
    with pytest.raises(InvalidN):
        ceva(1)


@pytest.mark.parametrize("n,q", [(3, 7), (2, 5), (4, 13), (3, 4), (5, 11)])
def test_ceva_realize(n, q):
    r = ceva_realize(n, q)
    assert r.isomorphic
    assert validate_tactical(r.structure).as_tuple() == (n * n, 3, 3 * n, n)
    assert r.constant == 1


def test_ceva_realize_needs_roots():
    with pytest.raises(RootsUnavailable):
        ceva_realize(5, 7)


def test_desargues():
    s = desargues()
    assert validate_tactical(s).as_tuple() == (10, 3, 10, 3)
    assert is_lineal(s)
    i = s.point_labels.index("12")
    assert sorted(s.block_labels[j] for j in s.point_blocks(i)) == ["123", "124", "125"]


def test_desargues_realize():
    r = desargues_realize()
    assert r.isomorphic
    assert r.structure == desargues()
    with pytest.raises(DegeneratePlane):
        desargues_realize(plane=(1, -1, 0, 0))


def test_reye():
    s = reye()
    assert validate_tactical(s).as_tuple() == (12, 4, 16, 3)
    points, lines = reye_realization()
    centre = points.labels.index("o")
    blocks = s.point_blocks(centre)
    assert len(blocks) == 4
    for j in blocks:
        u, w = lines[j]
        assert all(a == -b for a, b in zip(u[1:], w[1:]))
    for axis, name in enumerate("xyz"):
        for j in s.point_blocks(points.labels.index(name)):
            u, w = lines[j]
            diff = [i for i in range(1, 4) if u[i] != w[i]]
            assert diff == [axis + 1]


def test_hesse_salmon():
    s = hesse_salmon()
    assert validate_tactical(s).as_tuple() == (12, 4, 16, 3)
    a1 = s.point_labels.index("A1")
    assert sorted(s.block_labels[j] for j in s.point_blocks(a1)) == [
        "A1B1C1", "A1B2C4", "A1B3C2", "A1B4C3"]
    assert len(HESSE_SALMON_TRIPLES) == 16
    assert is_isomorphic(s, reye())


def test_complete_configuration():
    s = complete_configuration(6)
    assert validate_tactical(s).as_tuple() == (6, 5, 6, 5)
    assert is_isomorphic(complete_configuration(4), golden("four3"))
    with pytest.raises(InvalidV):
        complete_configuration(1)


@pytest.mark.parametrize("name", GOLDEN)
def test_golden_files_load(name):
    s = golden(name)
    assert validate_tactical(s).distinct


def test_catalog_parameters():
    for name, (build, params) in CATALOG.items():
        assert validate_tactical(build()).as_tuple() == params, name
