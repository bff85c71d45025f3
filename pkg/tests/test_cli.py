"""Tests for the command-line interface (exit codes, files, determinism)."""

import json

import pytest

from fmchow.cli import main


def run(tmp_path, *argv):
    return main([str(a) for a in argv])


class TestPresent:
    def test_writes_dump_and_mirror(self, tmp_path):
        out = tmp_path / "out"
        assert main(["present", "--d", "1", "--weights", "1,1", "--out", str(out)]) == 0
        dump = (out / "presentation.txt").read_text()
        assert "vars:" in dump and "rel:" in dump
        assert "D{1,2}" in dump
        assert dump.startswith("# config:")
        mirror = json.loads((out / "presentation.json").read_text())
        assert len(mirror["vars"]) == 3
        assert len(mirror["relations"]) == 2
        assert mirror["config"]["weights"] == ["1", "1"]

    def test_simplified_relation_counts(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["present", "--d", "1", "--weights", "1,1,1", "--fm", "--out", str(out)]
        )
        assert code == 0
        mirror = json.loads((out / "presentation.json").read_text())
        assert len(mirror["vars"]) == 7
        # 3 overlap + 5 diagonal-ideal multiples + 3 pairwise Chern
        assert len(mirror["relations"]) == 11

    def test_fm_requires_all_ones(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["present", "--d", "1", "--weights", "1,1/2,1/2", "--fm", "--out", str(out)]
        )
        assert code == 2
        assert not out.exists()

    def test_invalid_weight_rejected(self, tmp_path):
        out = tmp_path / "out"
        code = main(["present", "--d", "1", "--weights", "3/2,1", "--out", str(out)])
        assert code == 2
        assert not out.exists()

    def test_cas_export_includes_caps(self, tmp_path):
        out = tmp_path / "out"
        main(
            [
                "present",
                "--d",
                "2",
                "--weights",
                "1,1",
                "--export-cas",
                "--out",
                str(out),
            ]
        )
        cas = (out / "presentation.cas.txt").read_text()
        assert "h1^3" in cas and "h2^3" in cas
        assert "vars: h1, h2, D{1,2}" in cas

    def test_large_sets_input(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["present", "--d", "1", "--n", "3", "--large-sets", "1,2", "--out", str(out)]
        )
        assert code == 0
        mirror = json.loads((out / "presentation.json").read_text())
        # upward closure adds the triple
        assert mirror["config"]["large_sets"] == [[1, 2], [1, 2, 3]]

    def test_config_file(self, tmp_path):
        cfg = tmp_path / "job.json"
        cfg.write_text(
            json.dumps(
                {"base": {"kind": "projective", "dim": 1}, "weights": ["1", "1"]}
            )
        )
        out = tmp_path / "out"
        assert main(["present", "--config", str(cfg), "--out", str(out)]) == 0

    def test_config_rejects_floats(self, tmp_path):
        cfg = tmp_path / "job.json"
        cfg.write_text(json.dumps({"base": {"dim": 1}, "weights": [0.5, 1]}))
        assert main(["present", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 2

    def test_requires_exactly_one_instance_description(self, tmp_path):
        assert main(["present", "--d", "1", "--out", str(tmp_path)]) == 2


class TestRanks:
    def test_agreement_written(self, tmp_path):
        out = tmp_path / "out"
        assert main(["ranks", "--d", "2", "--weights", "1,1", "--out", str(out)]) == 0
        payload = json.loads((out / "ranks.json").read_text())
        assert payload["presentation_ranks"] == [1, 3, 4, 3, 1]
        assert payload["oracle_ranks"] == [1, 3, 4, 3, 1]
        assert payload["agree"] is True

    def test_zero_weights(self, tmp_path):
        out = tmp_path / "out"
        assert main(["ranks", "--d", "1", "--weights", "0,0,0", "--out", str(out)]) == 0
        payload = json.loads((out / "ranks.json").read_text())
        assert payload["presentation_ranks"] == [1, 3, 3, 1]

    def test_weighted_instance(self, tmp_path):
        out = tmp_path / "out"
        code = main(["ranks", "--d", "1", "--weights", "1,1/2,1/2", "--out", str(out)])
        assert code == 0
        payload = json.loads((out / "ranks.json").read_text())
        assert payload["agree"] is True

    def test_cap_refusal(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["ranks", "--d", "1", "--weights", "1,1,1", "--cap", "2", "--out", str(out)]
        )
        assert code == 3


class TestVerify:
    def test_counterexample_scenario(self, tmp_path):
        out = tmp_path / "out"
        assert main(["verify", "counterexample", "--out", str(out)]) == 0
        report = json.loads((out / "report_counterexample.json").read_text())
        assert report["pass"] is True
        assert report["evidence"]["h*E_in_ideal_of_h^3"] is False

    def test_equivalence_scenario_with_instance(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            ["verify", "equivalence", "--d", "1", "--n", "3", "--out", str(out)]
        )
        assert code == 0
        report = json.loads((out / "report_equivalence_d1_n3.json").read_text())
        assert report["pass"] is True

    def test_construction_all_walks(self, tmp_path):
        out = tmp_path / "out"
        code = main(
            [
                "verify",
                "construction",
                "--d",
                "1",
                "--weights",
                "1,1,1",
                "--walk",
                "all",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        report = json.loads((out / "report_construction_d1_n3.json").read_text())
        assert report["evidence"]["walks_checked"] == 6

    def test_unknown_scenario(self, tmp_path):
        assert main(["verify", "nonsense", "--out", str(tmp_path)]) == 2

    def test_default_suite(self, tmp_path):
        out = tmp_path / "out"
        assert main(["verify", "--out", str(out)]) == 0
        names = sorted(p.name for p in out.glob("report_*.json"))
        assert "report_counterexample.json" in names
        assert len(names) >= 4


class TestDeterminism:
    def test_present_is_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        argv = ["present", "--d", "1", "--weights", "1,1,1", "--export-cas"]
        assert main(argv + ["--out", str(a)]) == 0
        assert main(argv + ["--out", str(b)]) == 0
        for name in ("presentation.txt", "presentation.json", "presentation.cas.txt"):
            assert (a / name).read_bytes() == (b / name).read_bytes()

    def test_ranks_is_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        argv = ["ranks", "--d", "2", "--weights", "1,1"]
        assert main(argv + ["--out", str(a)]) == 0
        assert main(argv + ["--out", str(b)]) == 0
        assert (a / "ranks.json").read_bytes() == (b / "ranks.json").read_bytes()
