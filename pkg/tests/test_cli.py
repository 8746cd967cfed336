from pathlib import Path

import pytest

from truncvote.cli import main

DATA = Path(__file__).parent / "data"
SYNTHETIC = str(DATA / "synthetic10.soi")


class TestEvaluate:
    def test_borda_roundup(self, capsys):
        assert main(["evaluate", "--rule", "borda-roundup", SYNTHETIC]) == 0
        out = capsys.readouterr().out
        assert out.startswith("winner: ")
        assert out.count("\n") >= 5

    def test_stv_prints_trace(self, capsys):
        assert main(["evaluate", "--rule", "stv", SYNTHETIC]) == 0
        assert "round 1:" in capsys.readouterr().out

    def test_copeland_prints_matrix(self, capsys):
        assert main(["evaluate", "--rule", "copeland", SYNTHETIC]) == 0
        assert "pairwise matrix:" in capsys.readouterr().out

    def test_missing_file_is_domain_error(self, capsys):
        assert main(["evaluate", "--rule", "stv", "no-such-file.soi"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_unknown_rule_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["evaluate", "--rule", "banana", SYNTHETIC])
        assert excinfo.value.code == 2


class TestManipulate:
    def test_success_prints_witness(self, capsys):
        code = main(
            [
                "manipulate",
                "--rule",
                "borda-roundup",
                "--preferred",
                "4",
                "--coalition",
                "4",
                SYNTHETIC,
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("success")
        assert "1,4" in out  # each manipulator ranks only candidate 4

    def test_impossible_is_exit_zero(self, capsys, tmp_path):
        # one voter cannot overturn five committed complete ballots
        hopeless = tmp_path / "hopeless.soi"
        hopeless.write_text("2\n1,a\n2,b\n5,5,1\n5,1,2\n")
        code = main(
            [
                "manipulate",
                "--rule",
                "copeland",
                "--preferred",
                "2",
                "--coalition",
                "1",
                str(hopeless),
            ]
        )
        assert code == 0
        assert capsys.readouterr().out.startswith("impossible")

    def test_weighted_scoring_dp_path(self, capsys, tmp_path):
        partition = tmp_path / "partition.soi"
        partition.write_text("3\n1,a\n2,b\n3,p\n6,6,2\n3,1\n3,2\n")
        code = main(
            [
                "manipulate",
                "--rule",
                "modified-borda",
                "--preferred",
                "3",
                "--weights",
                "1,1",
                str(partition),
            ]
        )
        assert code == 0
        assert capsys.readouterr().out.startswith("success")


class TestReduce:
    def test_partition_mbc_files(self, capsys, tmp_path):
        out_prefix = str(tmp_path / "inst")
        assert main(["reduce", "partition-mbc", "--bag", "1,1", "--out", out_prefix]) == 0
        election_text = Path(out_prefix + ".soi").read_text()
        assert election_text.splitlines()[0] == "3"
        assert "3,1" in election_text
        assert Path(out_prefix + ".weights").read_text().strip() == "1,1"

    def test_partition_copeland_files(self, tmp_path):
        out_prefix = str(tmp_path / "cop")
        assert main(["reduce", "partition-copeland", "--bag", "2,2", "--out", out_prefix]) == 0
        assert Path(out_prefix + ".weights").read_text().strip() == "2,2"

    def test_subsetsum_files(self, tmp_path):
        out_prefix = str(tmp_path / "ss")
        code = main(
            ["reduce", "subsetsum-borda-av", "--pairs", "1,1;2,2", "--t1", "3", "--out", out_prefix]
        )
        assert code == 0
        assert Path(out_prefix + ".weights").read_text().strip() == "2,4"

    def test_3sat_prints_bag(self, capsys):
        assert main(["reduce", "3sat-subsetsum", "--vars", "1", "--clauses", "1,1,1"]) == 0
        out = capsys.readouterr().out
        assert "bag: 11,11,10,10,1,1" in out
        assert "target: 13" in out

    def test_odd_bag_is_domain_error(self, capsys, tmp_path):
        code = main(
            ["reduce", "partition-mbc", "--bag", "1,2", "--out", str(tmp_path / "x")]
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_reduce_output_matches_generator(self, tmp_path):
        from truncvote import gen_partition_to_mbc, parse_election_file, to_election

        out_prefix = str(tmp_path / "gen")
        main(["reduce", "partition-mbc", "--bag", "1,1", "--out", out_prefix])
        profile = parse_election_file(Path(out_prefix + ".soi").read_text())
        generated = gen_partition_to_mbc([1, 1])
        assert to_election(profile).ballots == generated.fixed.ballots


class TestStats:
    def test_kv_output(self, capsys):
        assert main(["stats", SYNTHETIC]) == 0
        out = capsys.readouterr().out
        assert "median:" in out and "complete_fraction:" in out

    def test_csv_output(self, capsys):
        assert main(["stats", "--format", "csv", SYNTHETIC]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "median,mean,std,complete_fraction,total_ballots"
        assert lines[1].endswith(",10")


class TestExperiment:
    def test_csv_to_stdout_and_file_agree(self, capsys, tmp_path):
        config = str(DATA / "experiment.cfg")
        assert main(["experiment", config]) == 0
        stdout_csv = capsys.readouterr().out
        out_file = tmp_path / "rows.csv"
        assert main(["experiment", config, "--out", str(out_file)]) == 0
        assert out_file.read_text() == stdout_csv
