import json
import os

import pytest

import make_golden
from conftest import GOLDEN_DIR, data_path
from fatcob.fgformat import parse_graph
from fatcob.openclosed import cobordism_signature


def run_cli(argv):
    return make_golden.run(argv)


class TestGolden:
    @pytest.mark.parametrize("name", sorted(make_golden.CASES))
    def test_output_matches_golden(self, name):
        code, out = run_cli(make_golden.CASES[name])
        assert code == 0
        with open(os.path.join(GOLDEN_DIR, name + ".txt"), "r",
                  encoding="utf-8") as fh:
            want = fh.read()
        assert out == want


class TestExitCodes:
    def test_success(self):
        code, _ = run_cli(["validate", data_path("fig4.fg")])
        assert code == 0

    def test_domain_failure_not_admissible(self):
        code, out = run_cli(["admissible", data_path("embedded_z.fg")])
        assert code == 1

    def test_domain_failure_not_gluable(self):
        code, _ = run_cli(["glue", data_path("cylinder.fg"),
                           data_path("pants.fg")])
        assert code == 1

    def test_domain_failure_not_isomorphic(self):
        code, _ = run_cli(["iso", data_path("loop.fg"),
                           data_path("fig4.fg")])
        assert code == 1

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.fg"
        bad.write_text("not a fatgraph\n")
        code, _ = run_cli(["validate", str(bad)])
        assert code == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            run_cli(["degree", data_path("pants.fg")])  # missing --dim
        assert info.value.code == 3
        with pytest.raises(SystemExit) as info:
            run_cli(["no-such-command"])
        assert info.value.code == 3

    def test_missing_file(self):
        code, _ = run_cli(["validate", "does-not-exist.fg"])
        assert code == 1

    def test_semantic_failure(self, tmp_path):
        bad = tmp_path / "bad.fg"
        bad.write_text("fatgraph\nvertex u\nvertex v\nedge e u v\n"
                       "order u e.0 e.1\n")
        code, _ = run_cli(["validate", str(bad)])
        assert code == 1


class TestJson:
    def test_report_shape_and_key_order(self):
        code, out = run_cli(["--json", "invariants", data_path("fig4.fg")])
        assert code == 0
        report = json.loads(out)
        assert list(report.keys()) == ["command", "inputs", "result",
                                       "warnings"]
        assert report["command"] == "invariants"
        assert report["result"]["chi"] == -2
        assert report["warnings"] == []

    def test_enumerate_json(self):
        code, out = run_cli(["--json", "enumerate", "--edges", "1"])
        report = json.loads(out)
        assert report["result"]["classes"] == 2


class TestGlueOutput:
    def test_glue_output_parses_and_composes(self):
        code, out = run_cli(["glue", "--subdivide", data_path("pants.fg"),
                             data_path("cylinder.fg")])
        assert code == 0
        g = parse_graph(out)
        sig = cobordism_signature(g)
        assert sig.source == ("circle", "circle")
        assert sig.target == ("circle",)

    def test_enumerate_env_bound(self, monkeypatch):
        monkeypatch.setenv("FATCOB_MAX_EDGES", "1")
        code, _ = run_cli(["enumerate", "--edges", "2"])
        assert code == 1
        monkeypatch.setenv("FATCOB_MAX_EDGES", "2")
        code, _ = run_cli(["enumerate", "--edges", "2"])
        assert code == 0
