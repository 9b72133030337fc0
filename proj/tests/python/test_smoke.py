"""Smoke tests for the _shiftcurves extension module."""

import json
import math

import _shiftcurves as sc


def test_lex_rank_roundtrip():
    assert sc.lex_rank(1, 2, 4) == 1
    assert sc.lex_rank(3, 4, 4) == 6
    for m in (2, 5, 9):
        n = m * (m - 1) // 2
        for r in range(1, n + 1):
            i, j = sc.lex_unrank(r, m)
            assert sc.lex_rank(i, j, m) == r


def test_shift_graph_shape():
    g = sc.shift_graph(5)
    assert g["m"] == 5
    assert len(g["vertices"]) == 10
    assert len(g["edges"]) == 10  # C(5,3)
    assert sc.is_triangle_free(5)
    assert sc.clique_number(5) == 2


def test_colorings():
    for m in (2, 4, 5, 8, 9):
        colors = sc.formula_coloring(m)
        assert len(set(colors)) == math.ceil(math.log2(m))
    res = sc.chromatic_number(6)
    assert res["conclusive"]
    assert res["chi"] == 3
    assert res["lower_bound_certified"]


def test_generate_and_verify():
    fam = sc.generate_family(4, 4, profile="figure")
    assert fam["kind"] == "four_segment"
    assert len(fam["curves"]) == 6
    assert fam["curves"][0]["vertices"][0] == ["-1/5", "1/2"]

    report = sc.verify_family(4, 4, profile="figure")
    assert report["pass"]
    names = [c["name"] for c in report["checks"]]
    assert "graph_identity" in names and "tangency" in names

    report3 = sc.verify_family(3, 3)
    assert report3["pass"]


def test_corruption_is_refuted():
    fam = sc.generate_family(4, 4)
    fam["curves"][0]["vertices"][1][1] = "7"
    report = sc.verify_family_json(json.dumps(fam))
    assert not report["pass"]


def test_render_and_dot():
    fam = sc.generate_family(3, 3)
    svg = sc.render_svg(json.dumps(fam), signed_log=True)
    assert svg.startswith("<svg") and "signed-log" in svg
    dot = sc.graph_dot(3)
    assert '"(1,2)" -- "(2,3)"' in dot
