"""Config parsing, flag precedence, exit codes, stream separation."""

import json
from pathlib import Path

import pytest

from helpers import write_tree
from smellscan.cli import ConfigError, main, make_config, build_parser, parse_config

FIXTURES = Path(__file__).parent / "fixtures"

CLEAN_TREE = {
    "ok.py": """\
        def add(a, b):
            return a + b
        """,
}


class TestParseConfig:
    def test_empty_file(self, tmp_path):
        cfg = tmp_path / "empty.cfg"
        cfg.write_text("")
        assert parse_config(cfg) == {}

    def test_single_override(self, tmp_path):
        cfg = tmp_path / "one.cfg"
        cfg.write_text("long_class_lines = 80\n")
        assert parse_config(cfg) == {"long_class_lines": 80}

    def test_comments_and_blanks_ignored(self, tmp_path):
        cfg = tmp_path / "c.cfg"
        cfg.write_text("# heading\n\nmax_params = 7\n")
        assert parse_config(cfg) == {"max_params": 7}

    def test_bad_value_names_line(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("long_class_lines = banana\n")
        with pytest.raises(ConfigError, match=r":1:"):
            parse_config(cfg)

    def test_unknown_key_named(self, tmp_path):
        cfg = tmp_path / "odd.cfg"
        cfg.write_text("long_method_lines = 10\nmystery_knob = 3\n")
        with pytest.raises(ConfigError, match="mystery_knob"):
            parse_config(cfg)

    def test_missing_equals(self, tmp_path):
        cfg = tmp_path / "broken.cfg"
        cfg.write_text("just words\n")
        with pytest.raises(ConfigError, match=r":1:"):
            parse_config(cfg)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            parse_config(tmp_path / "absent.cfg")

    def test_scope_value(self, tmp_path):
        cfg = tmp_path / "s.cfg"
        cfg.write_text("scope = corpus\n")
        assert parse_config(cfg) == {"scope": "corpus"}


class TestPrecedence:
    def test_flag_beats_config_beats_default(self, tmp_path):
        cfg = tmp_path / "t.cfg"
        cfg.write_text("long_class_lines = 80\nmax_params = 9\n")
        args = build_parser().parse_args(
            [str(tmp_path), "--config", str(cfg), "--max-params", "4"]
        )
        config = make_config(args)
        assert config.thresholds.long_class_lines == 80  # from config file
        assert config.thresholds.max_parameters == 4  # flag wins
        assert config.thresholds.long_method_lines == 40  # default

    def test_bad_flag_value_is_config_error(self, tmp_path):
        args = build_parser().parse_args([str(tmp_path), "--dup-window", "0"])
        with pytest.raises(ConfigError):
            make_config(args)


class TestExitCodes:
    def test_missing_root_is_3(self, tmp_path, capsys):
        code = main([str(tmp_path / "missing"), "--quiet"])
        assert code == 3
        assert "error" in capsys.readouterr().err

    def test_clean_tree_fail_on_smell_is_0(self, tmp_path, capsys):
        write_tree(tmp_path, CLEAN_TREE)
        assert main([str(tmp_path), "--fail-on-smell", "--quiet"]) == 0

    def test_mock_fixture_fail_on_smell_is_1(self, capsys):
        root = FIXTURES / "mock_smells"
        code = main([str(root), "--fail-on-smell", "--format", "json", "--quiet"])
        assert code == 1
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["findings"]) == 8

    def test_config_error_is_2(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("nope = 1\n")
        assert main([str(tmp_path), "--config", str(cfg)]) == 2

    def test_unwritable_destination_is_3(self, tmp_path):
        write_tree(tmp_path, CLEAN_TREE)
        target = tmp_path / "no" / "such" / "dir" / "report.json"
        code = main([str(tmp_path), "--format", "json", "--out", str(target)])
        assert code == 3


class TestStreams:
    def test_quiet_silences_diagnostics_only(self, tmp_path, capsys):
        write_tree(tmp_path, CLEAN_TREE)
        (tmp_path / "noisy.py").write_bytes(b"x = 1\ny = \xff\n")

        main([str(tmp_path), "--format", "json"])
        loud = capsys.readouterr()
        assert "NOISE noisy.py:2 undecodable bytes" in loud.err

        main([str(tmp_path), "--format", "json", "--quiet"])
        silent = capsys.readouterr()
        assert silent.err == ""
        assert silent.out == loud.out

    def test_csv_stdout_has_three_sections(self, tmp_path, capsys):
        write_tree(tmp_path, CLEAN_TREE)
        main([str(tmp_path), "--format", "csv", "--quiet"])
        out = capsys.readouterr().out
        for name in ("# findings.csv", "# buckets.csv", "# normalized.csv"):
            assert name in out

    def test_vanished_file_skipped_not_fatal(self, tmp_path, capsys, monkeypatch):
        import smellscan.ingest as ingest_mod

        write_tree(tmp_path, CLEAN_TREE)
        real_discover = ingest_mod.discover_files

        def with_ghost(config, diagnostics=None):
            return real_discover(config, diagnostics) + ["ghost.py"]

        monkeypatch.setattr(ingest_mod, "discover_files", with_ghost)
        code = main([str(tmp_path), "--format", "json"])
        captured = capsys.readouterr()
        assert code == 0
        assert "SKIP ghost.py" in captured.err
        assert json.loads(captured.out)["files_total"] == 1


class TestDeterminism:
    def test_repeat_runs_byte_identical(self, tmp_path):
        write_tree(
            tmp_path / "tree",
            {
                "a.py": "def f(a):\n    return a\n",
                "b.py": "x = 1\ny = 2\nz = 3\nx = 1\ny = 2\nz = 3\n",
            },
        )
        outputs = []
        for n in range(3):
            out = tmp_path / f"run{n}.json"
            assert main(
                [str(tmp_path / "tree"), "--format", "json", "--out", str(out), "--quiet"]
            ) == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_include_exclude_flags(self, tmp_path, capsys):
        write_tree(
            tmp_path,
            {"a.py": "x = 1\n", "b.txt": "y = 2\n", "skip/c.py": "z = 3\n"},
        )
        main(
            [str(tmp_path), "--format", "json", "--quiet",
             "--include", "*.py", "--include", "*.txt", "--exclude", "skip/*"]
        )
        doc = json.loads(capsys.readouterr().out)
        assert doc["files_total"] == 2
