import pytest

import tricolor


def test_parity_words():
    assert tricolor.e_collapse("ooeeoeoo", 5) == "ooeeeo"
    assert tricolor.in_t("oooooo")
    assert tricolor.in_t("oooooo", greedy=True)
    assert not tricolor.in_t("oooo")


def test_rings():
    assert tricolor.cps([1, 2, 1, 2]) == "oeoe"
    assert tricolor.decide3([1, 1, 1, 1, 1, 1])
    assert not tricolor.decide3([3, 3, 3, 3])
    coloring = tricolor.color3([1, 1, 1, 1, 1, 1])
    graph = tricolor.realize([1, 1, 1, 1, 1, 1])
    assert len(coloring) == graph["n"] == 6
    for u, v in graph["edges"]:
        assert coloring[u] != coloring[v]
    assert tricolor.color3([3, 3, 3, 3]) is None
    assert tricolor.count_colorings(graph) == 6


def test_errors_carry_kind():
    with pytest.raises(tricolor.TricolorError) as info:
        tricolor.e_collapse("oooo", 0)
    assert info.value.kind == "EntryNotEven"
    with pytest.raises(ValueError):
        tricolor.decide3([1, 2, 3])


def test_holes_and_oracle_agree():
    verdicts = set()
    for seed in range(1, 21):
        instance = tricolor.gen_holed(seed, holes=2)
        decision = tricolor.decide3_holes(instance)
        oracle = tricolor.find_coloring(instance)
        if decision["verdict"] == "No":
            assert oracle is None
        if decision["verdict"] == "Yes":
            colors = decision["witness"]["colors"]
            assert all(colors[u] != colors[v] for u, v in instance["edges"])
        verdicts.add(decision["verdict"])
    assert "No" in verdicts


def test_campaign_report():
    report = tricolor.run_campaign("lemma1", max_triangles=9, instances=10)
    assert report["claim"] == "lemma1"
    assert any(rec["instance"]["runs"] == [2, 2, 2, 2] for rec in report["counterexamples"])
    checked, confirmed = tricolor.reverify(report)
    assert checked == confirmed == len(report["counterexamples"])
