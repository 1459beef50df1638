"""Smoke test for the seaweed_py extension module."""

import json
import xml.etree.ElementTree as ET

import seaweed_py as sw


def main():
    assert sw.index([111, 13, 79], [165, 18, 20]) == 4
    assert sw.index("7") == 7
    assert sw.index_sl([1, 1, 4]) == 0

    trace = sw.reduce([5, 1, 2, 4])
    assert trace["index"] == 1
    assert trace["steps"][0]["before"] == "5,1,2,4"

    report = sw.index_report("2,4,3", "5,2,2")
    assert report["index"] == 3 and report["maximal_dimensions"] == [1, 2]

    m = sw.Meander([2, 4, 3], [5, 2, 2])
    assert m.n == 9 and m.index() == 3 and m.counts() == (1, 1)
    assert m.lower() == [(1, 2), (3, 6), (4, 5), (7, 9)]
    assert m.upper() == [(1, 5), (2, 4), (6, 7), (8, 9)]
    assert sorted(m.signature()) == [1, 2]
    assert m.maximal_cycles()[0]["vertices"] == [1, 2, 4, 5]
    svg = ET.fromstring(m.svg(highlight=0))
    paths = [e for e in svg.iter() if e.tag.endswith("path")]
    assert len(paths) == 8
    assert sum("highlight" in p.get("class") for p in paths) == 4
    assert m.ascii().splitlines()[-1] == "1 2 3 4 5 6 7 8 9"
    assert json.loads(m.to_json())["n"] == 9

    assert sw.index_via_form([2, 4, 3], [5, 2, 2], trials=5, seed=0) == 3
    assert sw.index_two(12, 18) == 6
    assert sw.index_three(1, 2, 3) == 1
    assert sw.index_aaab(4, 8) == 8
    assert sw.index_run(2, 3, 3) == sw.index([2, 2, 2, 3])
    assert sw.is_frobenius_run(2, 1, 1)
    assert sw.index_geometric(2, 4) == 7
    value, case = sw.index_four(1, 1, 1, 1)
    assert value == 2 and case == 1

    assert sw.compositions(3) == [[3], [2, 1], [1, 2], [1, 1, 1]]
    assert ("1,1,4", "6") in sw.frobenius_seaweeds(6)
    assert "swap-symmetry" in sw.check_names()
    r = sw.check_identity("swap-symmetry", 5)
    assert r["instances"] > 0 and r["failures"] == []

    for bad in (lambda: sw.index([2, 3], [4]), lambda: sw.index("1,x")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        sw.check_identity("no-such-check")
    except KeyError:
        pass
    else:
        raise AssertionError("expected KeyError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
