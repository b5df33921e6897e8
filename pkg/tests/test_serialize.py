"""Document round-trips, parse errors, and CSV layouts."""

import json

import pytest
from hypothesis import given, settings

from qbag import (
    DocumentError,
    DuplicateArgument,
    EmptyChain,
    RelationOverlap,
    SLFQuery,
    StrengthOutOfRange,
    build_chain,
    evaluate_chain,
    export_curve_csv,
    export_strengths_csv,
    fairness_report,
    parse_chain,
    parse_qbag,
    report_to_dict,
    serialize_chain,
    serialize_qbag,
)

from .cases import dialogue, dialogue_step1, dialogue_step3
from .strategies import acyclic_qbags, arbitrary_qbags, chains

SEED_DOCUMENT = """
{
  "format_version": "1",
  "kind": "qbag",
  "arguments": [
    {"id": "a", "initial": 0.5},
    {"id": "b", "initial": 0.7},
    {"id": "c", "initial": 0.2}
  ],
  "attacks": [],
  "supports": [["c", "a"]]
}
"""


class TestParseQbag:
    def test_parses_seed_document(self):
        assert parse_qbag(SEED_DOCUMENT) == dialogue_step1()

    def test_out_of_range_strength(self):
        doc = SEED_DOCUMENT.replace("0.5", "1.5")
        with pytest.raises(StrengthOutOfRange, match=r"arguments\[0\].initial"):
            parse_qbag(doc)

    def test_truncated_document(self):
        with pytest.raises(DocumentError, match="line"):
            parse_qbag(SEED_DOCUMENT[: len(SEED_DOCUMENT) // 2])

    def test_unknown_kind(self):
        doc = SEED_DOCUMENT.replace('"qbag"', '"mystery"')
        with pytest.raises(DocumentError, match="unknown kind"):
            parse_qbag(doc)

    def test_kind_mismatch(self):
        with pytest.raises(DocumentError, match="expected kind 'chain'"):
            parse_chain(SEED_DOCUMENT)

    def test_missing_format_version(self):
        doc = json.dumps({"kind": "qbag", "arguments": [], "attacks": [], "supports": []})
        with pytest.raises(DocumentError, match="format_version"):
            parse_qbag(doc)

    def test_duplicate_argument_keeps_specific_type(self):
        data = json.loads(SEED_DOCUMENT)
        data["arguments"].append({"id": "a", "initial": 0.5})
        with pytest.raises(DuplicateArgument):
            parse_qbag(json.dumps(data))

    def test_relation_overlap_keeps_specific_type(self):
        data = json.loads(SEED_DOCUMENT)
        data["attacks"] = [["c", "a"]]
        with pytest.raises(RelationOverlap):
            parse_qbag(json.dumps(data))

    def test_non_numeric_initial(self):
        data = json.loads(SEED_DOCUMENT)
        data["arguments"][0]["initial"] = "high"
        with pytest.raises(DocumentError, match=r"arguments\[0\].initial"):
            parse_qbag(json.dumps(data))

    def test_malformed_edge(self):
        data = json.loads(SEED_DOCUMENT)
        data["supports"] = [["c"]]
        with pytest.raises(DocumentError, match=r"supports\[0\]"):
            parse_qbag(json.dumps(data))


class TestParseChain:
    def test_inline_steps(self):
        doc = serialize_chain(dialogue())
        assert parse_chain(doc) == dialogue()

    def test_zero_steps(self):
        doc = json.dumps({"format_version": "1", "kind": "chain", "steps": []})
        with pytest.raises(EmptyChain):
            parse_chain(doc)

    def test_step_errors_carry_step_path(self):
        data = json.loads(serialize_chain(dialogue()))
        data["steps"][1]["arguments"][0]["initial"] = 2.0
        with pytest.raises(StrengthOutOfRange, match=r"steps\[1\].arguments\[0\]"):
            parse_chain(json.dumps(data))


class TestRoundTrip:
    def test_final_graph(self):
        g = dialogue_step3()
        assert parse_qbag(serialize_qbag(g)) == g

    def test_serialization_is_canonical(self):
        g = dialogue_step3()
        assert serialize_qbag(g) == serialize_qbag(parse_qbag(serialize_qbag(g)))

    @given(arbitrary_qbags())
    @settings(max_examples=60)
    def test_qbag_identity(self, g):
        assert parse_qbag(serialize_qbag(g)) == g

    @given(chains())
    @settings(max_examples=40)
    def test_chain_identity(self, c):
        assert parse_chain(serialize_chain(c)) == c


class TestStrengthsCsv:
    def test_dialogue_layout(self):
        csv = export_strengths_csv(evaluate_chain(dialogue()))
        lines = csv.strip().split("\n")
        assert lines[0] == "step,argument,final_strength"
        assert len(lines) - 1 == 3 + 4 + 5
        assert lines[1] == "1,a,0.6"
        assert "2,b,0" in lines
        assert "3,d,0.2" in lines

    def test_single_edgeless_step_echoes_initial_strengths(self):
        chain = build_chain([parse_qbag(SEED_DOCUMENT.replace('[["c", "a"]]', "[]"))])
        csv = export_strengths_csv(evaluate_chain(chain))
        assert csv == (
            "step,argument,final_strength\n1,a,0.5\n1,b,0.7\n1,c,0.2\n"
        )

    def test_empty_step_contributes_no_rows(self):
        chain = parse_chain(
            json.dumps(
                {
                    "format_version": "1",
                    "kind": "chain",
                    "steps": [{"arguments": [], "attacks": [], "supports": []}],
                }
            )
        )
        assert export_strengths_csv(evaluate_chain(chain)) == "step,argument,final_strength\n"


class TestCurveCsv:
    def test_dialogue_breakpoints(self):
        m = evaluate_chain(dialogue())
        report = fairness_report(m, SLFQuery(topics=frozenset("abc"), threshold=0.2))
        assert export_curve_csv(report) == (
            "x,safety_curve_y,fairness_line_y\n"
            "0,0,0\n"
            "1,2,2.33333333333\n"
            "2,4,4.66666666667\n"
            "3,7,7\n"
        )

    def test_uniform_counts_make_columns_equal(self):
        m = evaluate_chain(dialogue())
        report = fairness_report(m, SLFQuery(topics=frozenset("abc"), threshold=0.0))
        for line in export_curve_csv(report).strip().split("\n")[1:]:
            _, curve_y, line_y = line.split(",")
            assert curve_y == line_y

    def test_single_topic_has_two_rows(self):
        m = evaluate_chain(dialogue())
        report = fairness_report(m, SLFQuery(topics=frozenset("c"), threshold=0.2))
        assert export_curve_csv(report).strip().split("\n")[1:] == ["0,0,0", "1,3,3"]


class TestReportDict:
    def test_stable_shape(self):
        m = evaluate_chain(dialogue())
        report = fairness_report(m, SLFQuery(topics=frozenset("abc"), threshold=0.2))
        payload = report_to_dict(report)
        assert list(payload) == [
            "exceed_counts",
            "ordering",
            "curve_points",
            "line_slope",
            "gini_area",
            "gini_score",
            "p",
            "base_b",
            "shannon_score",
        ]
        assert payload["line_slope"] == "7/3"
        assert payload["gini_area"] == "1"
        assert payload["gini_score"] == 0.46212
        assert payload["p"] == {"a": "2/7", "b": "2/7", "c": "3/7"}
        assert payload["base_b"] == 7
        assert payload["shannon_score"] == 0.55449

    def test_undefined_distribution(self):
        m = evaluate_chain(dialogue())
        report = fairness_report(m, SLFQuery(topics=frozenset("ab"), threshold=0.9))
        payload = report_to_dict(report)
        assert payload["p"] is None
        assert payload["base_b"] is None
        assert payload["shannon_score"] == 1.0

    @given(acyclic_qbags())
    @settings(max_examples=30)
    def test_report_dict_serializes_to_json(self, g):
        chain = build_chain([g])
        if not g.args:
            return
        m = evaluate_chain(chain)
        topic = sorted(g.args)[0]
        report = fairness_report(m, SLFQuery(topics=frozenset({topic}), threshold=0.5))
        json.dumps(report_to_dict(report))
