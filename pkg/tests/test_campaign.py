import json


import pytest

from garding_nuij.campaign import (

    parse_report,
    recheck_document,
    render_report,
    verdict_to_json,
    verify_theorem_campaign,
)
from garding_nuij.hyperbolicity import SamplingConfig, test_hyperbolic as run_test_hyperbolic
from garding_nuij.parsing import parse_poly

CFG = SamplingConfig(sample_count=40, include_grid=False)


def test_empty_campaign():
    report = verify_theorem_campaign(0, (1, 3), (2, 3), cfg=CFG)
    data = json.loads(render_report(report))
    assert data["trials"] == []
    assert data["schema_version"] == 1
    assert set(data["summary"].values()) == {0}


def test_small_campaign_has_no_hard_failures():
    report = verify_theorem_campaign(8, (1, 4), (2, 4), cfg=CFG, seed=3)
    assert report.hard_failures == 0
    assert report.summary["symbol_checks"] == 16
    assert report.summary["forward_checks"] == 8 * 7
    for trial in report.trials:
        assert len(trial["forward"]["s_sweep"]) == 6
        assert trial["symbol"]["forward"] and trial["symbol"]["converse"]


def test_deterministic_bytes():
    a = render_report(verify_theorem_campaign(4, (1, 3), (2, 3), cfg=CFG, seed=9))
    b = render_report(verify_theorem_campaign(4, (1, 3), (2, 3), cfg=CFG, seed=9))
    assert a == b


def test_round_trip():
    report = verify_theorem_campaign(3, (1, 3), (2, 3), cfg=CFG, seed=1)
    again = parse_report(render_report(report))
    assert again == report


def test_converse_witnesses_recheck():
    report = verify_theorem_campaign(12, (2, 4), (2, 3), cfg=CFG, seed=4)
    assert report.summary["converse_not_hyperbolic"] > 0
    assert report.summary["converse_counterexamples_reproduced"] == report.summary["converse_not_hyperbolic"]
    results = recheck_document(report.to_dict())
    assert len(results) == report.summary["converse_not_hyperbolic"]
    assert all(ok for _, ok in results)


def test_word_from_composed_example_rendered():
    # find a trial drawn with m = 4, n = 3 and check its sequence against the hand expansion
    report = verify_theorem_campaign(30, (4, 4), (3, 3), cfg=CFG, seed=0)
    from garding_nuij.nuij import OperatorWord, expand_word
    from garding_nuij.campaign import sequence_to_json

    for trial in report.trials:
        word = OperatorWord.parse(",".join(trial["forward"]["word"]), 3)
        assert trial["forward"]["sequence"] == sequence_to_json(expand_word(word))
        if sorted(trial["forward"]["word"]) == ["x", "x", "y", "y"]:
            assert trial["forward"]["sequence"] == [
                "2*x + 2*y", "x^2 + 4*x*y + y^2", "2*x^2*y + 2*x*y^2", "x^2*y^2"]


def test_witness_block_shape():
    p = parse_poly("x^2 + y^2 + z^2", 3)
    block = verdict_to_json(p, run_test_hyperbolic(p, [0, 0, 1], CFG))
    assert block["status"] == "NotHyperbolic"
    w = block["witness"]
    assert set(w) == {"polynomial", "n", "base", "direction", "restriction"}
    assert all("/" in c for c in w["restriction"])
    assert recheck_document({"witness": w}) == [("$.witness", True)]


def test_tampered_witness_fails_recheck():
    p = parse_poly("x^2 + y^2 + z^2", 3)
    block = verdict_to_json(p, run_test_hyperbolic(p, [0, 0, 1], CFG))
    block["witness"]["polynomial"] = "x^2 + y^2 - z^2"
    assert recheck_document(block) == [("$.witness", False)]


def test_bad_ranges():
    with pytest.raises(ValueError):
        verify_theorem_campaign(1, (3, 2), (2, 3))
    with pytest.raises(ValueError):
        verify_theorem_campaign(1, (1, 2), (1, 3))
