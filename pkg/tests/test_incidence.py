import pytest

from configlab.catalog import complete_configuration, fano, golden
from configlab.census import enumerate_v3
from configlab.errors import (
    IncompatibleParams,
    IndexOutOfRange,
    InvalidParams,
    NotSymmetric,
    NotTactical,
)
from configlab.incidence import (
    IncidenceStructure,
    complement,
    delete_point,
    direct_sum,
    dual,
    has_distinct_rows,
    is_connected,
    is_lineal,
    is_tactical,
    pair_counts,
    s_equivalence_classes,
    validate_tactical,
)
from configlab.symmetry import is_isomorphic


def test_from_blocks_and_matrix_agree():
    s = IncidenceStructure.from_blocks(4, [[0, 1], [1, 2], [2, 3], [3, 0]])
    m = s.matrix()
    assert m[0] == [1, 0, 0, 1]
    assert IncidenceStructure.from_matrix(m) == s
    assert s.blocks == [(0, 1), (1, 2), (2, 3), (0, 3)]
    assert s.point_blocks(1) == [0, 1]
    assert s.incident(3, 2) and not s.incident(3, 1)


def test_out_of_range_block_entry():
    with pytest.raises(IndexOutOfRange):
        IncidenceStructure.from_blocks(3, [[0, 3]])


def test_fano_parameters():
    p = validate_tactical(fano())
    assert p.as_tuple() == (7, 3, 7, 3)
    assert p.symmetric and p.distinct


def test_not_tactical_reports_offender():
    s = IncidenceStructure.from_blocks(3, [[0, 1], [0, 2], [0]])
    with pytest.raises(NotTactical) as exc:
        validate_tactical(s)
    assert exc.value.axis == "point" and exc.value.index == 1
    assert exc.value.to_dict()["error"] == "NotTactical"
    assert not is_tactical(s)


def test_distinctness_flag():
    s = IncidenceStructure.from_blocks(2, [[0, 1], [0, 1]])
    assert not has_distinct_rows(s)
    assert validate_tactical(s).distinct is False


def test_dual_swaps_parameters_and_labels():
    s = golden("hesse")
    d = dual(s)
    assert validate_tactical(d).as_tuple() == (12, 3, 9, 4)
    assert d.block_labels == s.point_labels
    assert dual(d) == s


def test_complement_of_fano_is_biplane_like():
    c = complement(fano())
    p = validate_tactical(c)
    assert p.as_tuple() == (7, 4, 7, 4)
    assert pair_counts(c) == {2}
    assert complement(c) == fano()


def test_complement_needs_symmetric():
    with pytest.raises(NotSymmetric):
        complement(golden("hesse"))


def test_direct_sum():
    s = direct_sum(fano(), fano())
    assert validate_tactical(s).as_tuple() == (14, 3, 14, 3)
    assert not is_connected(s)
    with pytest.raises(IncompatibleParams):
        direct_sum(fano(), golden("hesse"))


def test_connectivity():
    assert is_connected(fano())
    assert is_connected(complete_configuration(2)) is False


def test_s_classes_of_golden_nine_threes():
    # three S-classes of size 3, one class, and classes of sizes 6 and 3
    assert s_equivalence_classes(golden("brianchon"))[1] == [3, 3, 3]
    assert s_equivalence_classes(golden("cyclic93"))[1] == [9]
    assert s_equivalence_classes(golden("third93"))[1] == [3, 6]
    classes, _ = s_equivalence_classes(golden("brianchon"))
    assert sorted(x for c in classes for x in c) == list(range(9))


def test_lineal():
    assert is_lineal(fano())
    assert not is_lineal(golden("five3"))
    for name in ("four3", "five3", "six3"):
        assert max(pair_counts(golden(name))) > 1


def test_delete_point_of_hesse_is_moebius_kantor():
    mk = enumerate_v3(8).representatives[0]
    s = delete_point(golden("hesse"), 0)
    assert validate_tactical(s).as_tuple() == (8, 3, 8, 3)
    assert is_isomorphic(s, mk)
    with pytest.raises(IndexOutOfRange):
        delete_point(fano(), 7)


def test_json_roundtrip_and_labels():
    s = golden("brianchon")
    t = IncidenceStructure.from_json(s.to_json())
    assert t == s and t.point_labels == s.point_labels
    assert t.to_json() == s.to_json()


def test_json_block_count_mismatch():
    with pytest.raises(InvalidParams):
        IncidenceStructure.from_dict({"v": 2, "b": 3, "blocks": [[0], [1]]})


def test_csv_roundtrip():
    s = fano()
    assert IncidenceStructure.from_csv(s.to_csv()) == s
    assert s.to_csv().splitlines()[0].count(",") == 6


def test_relabel_is_an_isomorphism():
    s = fano()
    p = [3, 1, 4, 0, 6, 5, 2]
    q = [6, 5, 4, 3, 2, 1, 0]
    t = s.relabel(p, q)
    for x in range(7):
        for j in range(7):
            assert s.incident(x, j) == t.incident(p[x], q[j])
