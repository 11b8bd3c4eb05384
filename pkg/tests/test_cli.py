"""
Tests for the command-line entry point.
"""

import json

import pytest

from src.main import build_parser, main


@pytest.mark.integration
class TestWordCommands:
    """Factorizations and word classes from the command line."""

    def test_factorize(self, capsys):
        assert main(["factorize", "dadccdbccc"]) == 0
        assert capsys.readouterr().out.strip() == "d|adccdbccc"

    def test_isf(self, capsys):
        assert main(["isf", "adbccc", "--wrt", "ccd"]) == 0
        assert capsys.readouterr().out.strip() == "a!d!bccc"

    def test_records_format(self, capsys):
        assert main(["--format", "records", "factorize", "dadccdbccc"]) == 0
        records = json.loads(capsys.readouterr().out)
        assert records["factors"] == ["d", "adccdbccc"]
        assert records["starts"] == [1, 2]

    def test_word_class(self, capsys):
        assert main(["word-class", "abab"]) == 0
        assert capsys.readouterr().out.strip() == "even_plus_singleton"


@pytest.mark.integration
class TestBijectionCommands:
    """Psi, Omega, the necklace maps and f_S."""

    def test_psi(self, capsys, fresh_config):
        assert main(["psi", "dadccdbccc"]) == 0
        out = capsys.readouterr().out
        assert "d|adccd!bccc" in out
        assert out.strip().endswith("result: cdcdadbccc")

    @pytest.mark.parametrize("command, word, result", [
        ("psi", "dadccdbccc", "cdcdadbccc"),
        ("omega", "cdcdadbccc", "dadccdbccc"),
    ])
    def test_trace_switch(self, capsys, fresh_config, command, word, result):
        assert main([command, "--trace", word]) == 0
        out = capsys.readouterr().out
        assert "(F" in out
        assert out.strip().endswith(f"result: {result}")

        assert main([command, "--no-trace", word]) == 0
        assert capsys.readouterr().out.strip() == f"result: {result}"

    def test_omega_records(self, capsys, fresh_config):
        assert main(["-f", "records", "omega", "cdcdadbccc"]) == 0
        records = json.loads(capsys.readouterr().out)
        assert records["result"] == "dadccdbccc"
        assert [s["rule"] for s in records["steps"]] == [None, "F'", "S'", "P'", "S'"]

    def test_phi_and_inverse(self, capsys):
        assert main(["phi", "--set", "4,7", "45672381"]) == 0
        assert capsys.readouterr().out.startswith("(a,b)(a,b)(a,a,b,c)")
        assert main(["phi-inv", "--set", "4,7", "(a,b)(a,b)(a,a,b,c)"]) == 0
        assert capsys.readouterr().out.strip() == "45672381  (3,6)(2,5)(1,4,7,8)"

    def test_fs_with_cycle_tokens(self, capsys, fresh_config):
        assert main(["fs", "--set", "full", "(6)(1,7,3,8,4,2,5)"]) == 0
        assert capsys.readouterr().out.strip().endswith("(4,6)(3,8)(1,7,2,5)")

    def test_fs_trace(self, capsys, fresh_config):
        assert main(["fs", "--set", "4,7", "75218634", "--trace"]) == 0
        out = capsys.readouterr().out
        assert "word baabaabc" in out
        assert "image    45672381" in out

    def test_fs_inverse(self, capsys, fresh_config):
        assert main(["fs-inv", "--set", "4,7", "4", "5", "6", "7", "2", "3", "8", "1"]) == 0
        assert capsys.readouterr().out.startswith("75218634")


@pytest.mark.integration
class TestVerifyCommands:
    """Exhaustive checks exit 0 when they pass."""

    def test_counts(self, capsys, fresh_config):
        assert main(["verify-counts", "--n", "3", "4"]) == 0
        out = capsys.readouterr().out
        assert "PASS  n=3" in out
        assert "PASS  n=4" in out

    def test_gf(self, capsys, fresh_config):
        assert main(["verify-gf", "--k", "2", "--degree", "5", "--series"]) == 0
        assert capsys.readouterr().out.count("PASS") == 6

    def test_fs_single_subset(self, capsys, fresh_config):
        assert main(["verify-fs", "--n", "5", "--set", "1,3"]) == 0

    def test_necklaces_and_maps(self, capsys, fresh_config):
        assert main(["verify-necklaces", "--n", "4", "--roundtrips"]) == 0
        assert main(["verify-maps", "--n", "4"]) == 0


@pytest.mark.integration
class TestErrors:
    """Bad input exits 2 with a one-line message."""

    def test_word_outside_domain(self, capsys, fresh_config):
        assert main(["psi", "abab"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_alphabet_restriction(self, capsys):
        assert main(["-k", "2", "factorize", "abc"]) == 2

    def test_precondition(self, capsys, fresh_config):
        assert main(["fs", "--set", "4", "75218634"]) == 2

    def test_budget(self, capsys, fresh_config, monkeypatch):
        monkeypatch.setattr(fresh_config.verification, "max_perm_n", 4)
        assert main(["verify-counts", "--n", "5"]) == 2

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
