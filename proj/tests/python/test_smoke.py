import pytest

import orbit_atlas as oa


def test_counts():
    assert oa.count("GL3") == {"korbits": 6, "borbits": 13}
    assert len(oa.borbits("SO5")) == 17
    assert ("Q_{1,4}", 0) in oa.korbits("GL4")


def test_act_and_rep():
    out = oa.act("GL2|Q_1|w=[1]|.", "R:1")
    assert out["kind"] == "deferred"
    assert out["reason"] == "K-orbit moves (sequel case)"
    up = oa.act("GL3|Q_1|w=[1,2]|.", "L:1")
    assert up["kind"] == "raised"
    assert oa.dim(up["result"]) == 1
    assert oa.rep("GL4|Q_1|w=[1,2,3]|.") == "(e4 ⊂ e1 ⊂ e2 ⊂ e3)"


def test_oracle_matches_enumeration():
    sizes = oa.oracle_sizes("GL3", 3)
    assert len(sizes) == len(oa.borbits("GL3"))
    assert sum(sizes) == (1 + 3 + 9) * (1 + 3)


def test_weak_order_dot():
    assert oa.weak_order_dot("GL2").startswith('digraph "GL2"')


def test_errors():
    with pytest.raises(oa.AtlasError):
        oa.count("SP4")
    with pytest.raises(ValueError):
        oa.act("GL2|Q_1|w=[1]|.", "Z:1")


def test_verify_subset():
    rows = oa.verify({1, 2, 3})
    assert [r[0] for r in rows] == [1, 2, 3]
    assert all(r[2] for r in rows)
