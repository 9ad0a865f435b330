import pytest

from configlab import canon
from configlab.catalog import (
    ceva,
    complete_configuration,
    desargues,
    fano,
    golden,
    hesse_salmon,
    modular_config,
    reye,
)
from configlab.census import enumerate_v3
from configlab.errors import Undefined
from configlab.incidence import IncidenceStructure, direct_sum, dual
from configlab.levi import levi_graph
from configlab.symmetry import (
    automorphism_group,
    canonical,
    canonical_form,
    count_s_arcs,
    is_isomorphic,
    is_regular_configuration,
    is_self_dual,
    isomorphism,
    s_regularity,
)

from .conftest import random_relabel
from .oracles import nx_automorphism_count, nx_isomorphic


def test_levi_graph_of_fano_is_heawood():
    lg = levi_graph(fano())
    assert lg.n == 14 and lg.num_edges() == 21
    assert set(lg.degrees()) == {3}
    assert lg.girth() == 6
    assert lg.is_bipartite_by_color()
    assert lg.color(0) == "black" and lg.color(7) == "white"


def test_levi_graph_small_cases():
    lg = levi_graph(complete_configuration(4))
    assert lg.n == 8 and set(lg.degrees()) == {3}
    lg = levi_graph(desargues())
    assert lg.n == 20 and set(lg.degrees()) == {3}


def test_dot_export_colours():
    dot = levi_graph(fano()).to_dot()
    assert dot.count("fillcolor=black") == 7
    assert dot.count("fillcolor=white") == 7
    assert dot.count(" -- ") == 21


@pytest.mark.parametrize("name", ["fano", "four3", "five3", "six3", "brianchon", "cyclic93", "third93"])
def test_group_orders_match_vf2(name):
    s = fano() if name == "fano" else golden(name)
    assert automorphism_group(s).order == nx_automorphism_count(s)
    assert automorphism_group(s, allow_switch=True).order == nx_automorphism_count(s, True)


def test_fano_group_and_polarity():
    proper = automorphism_group(fano())
    full = automorphism_group(fano(), allow_switch=True)
    assert proper.order == 168 and full.order == 336
    assert full.has_switch and full.has_polarity
    assert proper.group.order() == 168


def test_disconnected_switch_is_global():
    # on 2K2 a colour swap on one component alone is not a switch
    s = complete_configuration(2)
    full = automorphism_group(s, allow_switch=True)
    assert full.order == 4 == nx_automorphism_count(s, True)
    assert full.has_polarity
    t = direct_sum(complete_configuration(3), complete_configuration(3))
    assert automorphism_group(t, allow_switch=True).order == nx_automorphism_count(t, True) == 144


def test_no_switch_when_not_self_dual():
    rep = automorphism_group(golden("hesse"), allow_switch=True)
    assert not rep.has_switch and rep.has_polarity is False


def test_complete_configuration_orders():
    import math

    for v in range(2, 8):
        assert automorphism_group(complete_configuration(v)).order == math.factorial(v)
    for v in range(2, 9):
        assert automorphism_group(complete_configuration(v), allow_switch=True).has_polarity


def test_canonical_form_relabel_invariant(rng):
    for s in (fano(), golden("brianchon"), desargues(), reye()):
        c = canonical_form(s)
        for _ in range(5):
            assert canonical_form(random_relabel(s, rng)) == c


def test_canonical_structure_is_relabeling():
    s = golden("third93")
    cf = canonical(s)
    assert cf.structure == s.relabel(
        [cf.point_order.index(x) for x in range(9)], [cf.block_order.index(j) for j in range(9)])
    assert cf.certificate.startswith(b"9,9;")


def test_nine_threes_pairwise_distinct():
    names = ["brianchon", "cyclic93", "third93"]
    certs = {canonical_form(golden(n)) for n in names}
    assert len(certs) == 3
    for a in names:
        for b in names:
            assert is_isomorphic(golden(a), golden(b)) == nx_isomorphic(golden(a), golden(b))


def test_isomorphism_witness(rng):
    s = golden("brianchon")
    t = random_relabel(s, rng)
    pmap, bmap = isomorphism(s, t)
    for x in range(9):
        for j in range(9):
            assert s.incident(x, j) == t.incident(pmap[x], bmap[j])
    assert isomorphism(s, golden("cyclic93")) is None


def test_isomorphic_shortcuts_on_shape():
    assert not is_isomorphic(fano(), golden("hesse"))
    assert not is_isomorphic(golden("hesse"), dual(golden("hesse")))


def test_self_duality():
    assert is_self_dual(fano())
    assert is_self_dual(desargues())
    assert not is_self_dual(golden("hesse"))


def test_regularity():
    assert is_regular_configuration(fano())
    assert is_regular_configuration(golden("brianchon"))
    assert is_regular_configuration(golden("cyclic93"))
    assert not is_regular_configuration(golden("third93"))


def test_arc_counts():
    adj = levi_graph(fano()).adj
    # 14 vertices, 3 choices then 2 for every further step
    assert [count_s_arcs(adj, s) for s in range(4)] == [14, 42, 84, 168]


@pytest.mark.parametrize("name,expected", [("fano", 4), ("desargues", 3), ("brianchon", 3), ("mk", 2)])
def test_s_regularity_arc_transitive(name, expected):
    s = {"fano": fano(), "desargues": desargues(), "brianchon": golden("brianchon"),
         "mk": enumerate_v3(8).representatives[0]}[name]
    sr = s_regularity(s)
    assert sr == expected
    assert automorphism_group(s, allow_switch=True).order == 2 ** sr * 3 * s.v


def test_s_regularity_undefined_cases():
    with pytest.raises(Undefined):
        s_regularity(complete_configuration(2))
    with pytest.raises(Undefined):
        s_regularity(direct_sum(fano(), fano()))
    with pytest.raises(Undefined):
        s_regularity(golden("third93"))


def test_ceva_and_modular_groups():
    assert automorphism_group(ceva(3)).order == 108
    assert automorphism_group(ceva(3), allow_switch=True).order == 216
    for n in (2, 4, 5):
        assert automorphism_group(ceva(n)).order >= 6 * n * n
    assert automorphism_group(modular_config(3)).order == automorphism_group(golden("hesse")).order


def test_reye_group_order():
    assert automorphism_group(reye()).order == 576
    assert automorphism_group(hesse_salmon()).order == 576


def test_search_node_limit():
    from configlab.errors import BudgetExceeded

    lg = levi_graph(complete_configuration(6))
    with pytest.raises(BudgetExceeded):
        canon.search(lg.adj, [list(range(6)), list(range(6, 12))], node_limit=2)


def test_empty_blocks_structure():
    s = IncidenceStructure(3, 2, [0, 0, 0])
    assert canonical_form(s) == canonical_form(s.relabel([2, 0, 1], [1, 0]))
