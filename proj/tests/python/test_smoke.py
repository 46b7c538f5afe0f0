import pytest

import circmagic as cm

GAMMA3 = [2, 7, 15, 5, 22, 18, 11, 19, 3, 8, 13, 6,
          23, 16, 12, 20, 1, 9, 14, 4, 24, 17, 10, 21]


def test_admissible_gamma3():
    chars = cm.admissible("24:1,2,3")
    assert [c["j"] for c in chars] == [3, 8, 9, 15, 16, 21]
    assert {c["j"]: c["tags"] for c in chars}[8] == ["T2"]


def test_normalize_and_canonical():
    assert cm.normalize("24:-1,26,3") == "24:1,2,3"
    assert cm.canonical("24:5,10,15") == "24:1,2,3"


def test_decide_paths():
    assert cm.decide("7:1,2,3")["reason"] == "empty-kernel"
    v = cm.decide("1540:2,152,385")
    assert v["status"] == "yes" and v["family"] == "T1a[5,77]"
    v = cm.decide("24:1,2,3")
    assert v["status"] == "yes" and v["step"] == 6
    assert cm.verify("24:1,2,3", v["labeling"]) == 75


def test_labels_verify():
    assert cm.verify("1540:5,413,737", cm.label("T1b[5,7,11]")) == 4623
    assert cm.verify("12:1,3,5", cm.label("Ml[3]")) == 39
    assert cm.verify("24:1,2,3", GAMMA3) == 75
    assert cm.verify("24:1,5,6", GAMMA3) == 75
    assert cm.verify("24:1,2,3", list(range(1, 25))) is None


def test_families():
    assert cm.enumerate_families(12) == ["Ml[3]", "Pr[3]", "C3K[4]"]
    assert cm.family_set("T2[5,7]") == "105:1,6,34"
    assert ("C3K[8]", 1) in [(f, q) for f, q in cm.recognize("24:1,7,9")]


def test_search_and_sublabeling():
    out = cm.search("12:1,3,5")
    assert out["outcome"] == "found"
    assert cm.search("7:1,2,3")["stats"]["prefiltered"]
    sub = cm.tetravalent_sublabeling(15, 4)
    assert cm.verify("30:1,4", sub) == 62


def test_errors():
    with pytest.raises(ValueError):
        cm.normalize("24:0,1,2")
    with pytest.raises(ValueError):
        cm.label("C3K[6]")
    with pytest.raises(ValueError):
        cm.verify("24:1,2,3", [1] * 24)
