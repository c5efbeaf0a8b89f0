import json

import pytest

import klrtype


def test_max_plus_class():
    rows = klrtype.max_plus([1, 0, 0, 1, 0, 0, 1])
    assert len(rows) == 12
    assert [0, 0, 0, 3, 0, 0, 0] in [r["weight"] for r in rows]
    assert klrtype.solve_x([1, 0, 0, 1, 0, 0, 1], [0, 0, 0, 3, 0, 0, 0]) == [3, 2, 1, 0, 1, 2, 3]


def test_quiver_json():
    q = json.loads(klrtype.quiver_json([1, 0, 0, 1, 0, 0, 1]))
    assert len(q["vertices"]) == 12
    assert len(q["arrows"]) == 21
    assert "->" in klrtype.quiver_dot([2, 0, 0, 0])


def test_classify():
    assert klrtype.classify([3, 0], [1, 1]) == "Tame"
    assert klrtype.classify([3, 0, 0], [1, 1, 1], t="sign") == "Wild"
    with pytest.raises(klrtype.KlrError):
        klrtype.classify([2, 0], [1, 1])
    with pytest.raises(ValueError):
        klrtype.classify([3, 0], [1, 1], t="bogus")


def test_graded_dim():
    assert klrtype.graded_dim([2, 1], [1, 1], [0, 1], [0, 1]) == {0: 1, 2: 2, 4: 2, 6: 1}
    assert klrtype.graded_dim([2, 1], [1, 1], [0, 1], [1, 0]) == {2: 1, 4: 1}
    total = klrtype.graded_dim_total([3, 0], [1, 1])
    assert total == {0: 1, 2: 2, 4: 2, 6: 1}


def test_brauer():
    assert klrtype.line_cartan(2, 2) == [[4, 2], [2, 4]]
    sols = klrtype.decomp_search([[4, 2], [2, 4]])
    assert len(sols) == 1 and len(sols[0]) == 6
    assert len(klrtype.decomp_search(klrtype.gamma_cartan(1, 1, 3))) > 1
