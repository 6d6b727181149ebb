"""Smoke tests for the _zgu extension module."""
import _zgu


def test_orders():
    assert _zgu.group_order(7) == 168
    assert _zgu.group_order(9) == 360
    assert _zgu.count_classes_of_order_r(9, 5) == 2
    assert _zgu.divides_power_minus_one(2, 3, 6)
    assert not _zgu.divides_power_minus_one(2, 4, 6)


def test_classes_and_table():
    cl = _zgu.conjugacy_classes(7)
    assert len(cl["classes"]) == 6
    assert sum(c["size"] for c in cl["classes"]) == 168
    t = _zgu.char_table(7)
    assert sorted(r["degree"] for r in t["rows"]) == [1, 3, 3, 6, 7, 8]
    assert _zgu.verify_orthogonality(13)
    assert _zgu.fs_indicator_xi(11) == 1
    real = _zgu.real_classes(7)
    assert sum(not c["real"] for c in real["classes"]) == 2


def test_two_subgroups():
    rep = _zgu.two_subgroups(9)
    assert rep["verdict"] == "cyclic or dihedral"
    assert len(rep["obstructions"]) == 3
    assert all(o["verdict"] == "Contradiction" for o in rep["obstructions"])


def test_help():
    res = _zgu.help_enumerate(7, 3)
    assert res["complete"]
    assert len(res["solutions"]) == 1
    assert res["solutions"][0]["trivial"]


def test_screen():
    rep = _zgu.screen("a7", 9)
    assert rep["verdict"] == "Excluded"
    assert "1 < 2" in rep["reason"]
    assert _zgu.screen("psl2:3,2", 9)["verdict"] == "Admissible"
    mini = _zgu.minimal_simple(g="sz:3")
    assert any("order-equal" in line for line in mini["lines"])
    assert _zgu.suzuki_exclusion(5, 3)["excluded"]


def test_errors():
    try:
        _zgu.group_order(3)
    except Exception as e:
        assert "q" in str(e)
    else:
        raise AssertionError("expected an error for q=3")


def test_brauer_characters():
    rows = _zgu.brauer_characters(9)
    degrees = sorted(r["degree"] for r in rows)
    assert degrees == [1, 3, 3, 4, 9]
    st = next(r for r in rows if r["degree"] == 9)
    assert "c" not in st["values"] and "d" not in st["values"]


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok {name}")
    print("python smoke ok")
