import pytest

import pcat


def test_parse_and_print():
    p = pcat.Partition("-:wb:[l1 l2]")
    assert str(p) == "-:wb:[l1 l2]"
    assert p.total_points == 2
    assert p.blocks() == [["l1", "l2"]]
    assert p.normalized_color("l2") == "b"
    assert p.total_color_sum() == 0
    assert p.color_distance("l1", "l2") == 0


def test_bad_literal_raises():
    with pytest.raises(pcat.PcatError):
        pcat.Partition("-:wb:[l1][l1]")


def test_category_operations():
    cup = pcat.Partition("-:wb:[l1 l2]")
    assert str(pcat.tensor(cup, cup)) == "-:wbwb:[l1 l2][l3 l4]"
    proj = pcat.compose(cup, pcat.involution(cup))
    assert pcat.is_projective(proj)
    assert pcat.rotate(pcat.Partition("-:wb:[l1][l2]"), "up_right") == pcat.Partition(
        "w:w:[u1][l1]"
    )
    assert pcat.project(cup, ["l1"]) == pcat.Partition("w:w:[u1 l1]")
    assert pcat.erase_turn(cup, "l1", "l2") == pcat.Partition("-:-:")


def test_analysis():
    a = pcat.analyze([pcat.Partition("-:wb:[l1 l2]")])
    assert a["f"] == [2]
    assert a["k"] == [0]
    assert a["l"] == []
    assert a["k_refined"]["wb"] == [0]


def test_closure_and_case():
    r = pcat.closure([], cap=4)
    assert r["fixpoint"]
    assert r["case"] == "O"
    assert any(str(p) == "-:wbwb:[l1 l2][l3 l4]" for p in r["members"])

    s = pcat.closure(
        [pcat.Partition("-:wbwb:[l1 l2 l3 l4]"), pcat.Partition("-:wb:[l1][l2]")], cap=5
    )
    assert s["case"] == "S"


def test_classification():
    assert pcat.classify_tuple("{2};+-{0,2};2Z;Z;Z;Z") == "row=O1 u=1 m=1 D={}"
    assert pcat.classify_tuple("{3};{0};{0};{};{0};Z") is None
    assert pcat.instantiate_row("row=O4 m=5") == "{2};{0};{0};{};5Z;Z"
    rows = pcat.consistent_rows([pcat.Partition("-:wb:[l1 l2]")])
    assert any(r.startswith("row=O1") for r in rows)


def test_enumeration_count():
    assert len(pcat.enumerate_partitions(0, 2)) == 8


def test_verify_check():
    r = pcat.run_check("delta_antisym_mod_sigma", max_points=4)
    assert r["status"] == "pass"
    assert r["instances"] > 0
