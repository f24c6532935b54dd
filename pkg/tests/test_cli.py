import io
import sys

import pytest

from vmramsey.cli import main
from vmramsey.graph6 import decode, encode
from vmramsey.graphs import complete_graph, cycle_graph, empty_graph, join


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_generated_census_n3_k2(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--k", "2", "--n-from-gen", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == [
            "n", "k", "budget", "total", "p1", "p2", "p3", "p3_budgeted", "p3_total",
        ]
        assert lines[1].split("\t") == ["3", "2", "-", "4", "3", "1", "0", "0", "0"]

    def test_file_input_and_phase3_out(self, capsys, tmp_path):
        path = tmp_path / "two.g6"
        path.write_text(f"{encode(complete_graph(2))}\n{encode(empty_graph(2))}\n")
        out_path = tmp_path / "phase3.g6"
        code, out, _ = run_cli(
            capsys, "classify", "--k", "2", "--input", str(path), "--phase3-out", str(out_path)
        )
        assert code == 0
        assert out.strip().splitlines()[1].split("\t")[3:] == ["2", "1", "0", "1", "0", "1"]
        assert out_path.read_text() == encode(complete_graph(2)) + "\n"

    def test_malformed_input_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("A?\n\x02zzz\n")
        code, _, err = run_cli(capsys, "classify", "--k", "2", "--input", str(path))
        assert code == 2
        assert "line 2" in err

    def test_worker_count_does_not_change_output(self, capsys, tmp_path):
        path = tmp_path / "census.g6"
        from vmramsey.generate import generate_all

        path.write_text("".join(encode(g) + "\n" for g in generate_all(5)))
        _, out1, _ = run_cli(capsys, "classify", "--k", "3", "--input", str(path))
        _, out2, _ = run_cli(
            capsys, "classify", "--k", "3", "--input", str(path), "--workers", "2"
        )
        assert out1 == out2

    def test_budget_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--k", "4", "--n-from-gen", "4", "--budget", "10"
        )
        assert code == 0
        row = out.strip().splitlines()[1].split("\t")
        assert row[2] == "10"

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "classify", "--k", "2", "--n-from-gen", "3", "--format", "text"
        )
        assert code == 0
        assert "n=3" in out and "total=4" in out and "p1=3" in out and "p2=1" in out

    def test_rejects_bad_budget_and_workers(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--k", "2", "--n-from-gen", "3", "--budget", "0")
        assert code == 2 and "budget" in err
        code, _, err = run_cli(capsys, "classify", "--k", "2", "--n-from-gen", "3", "--workers", "0")
        assert code == 2 and "workers" in err


class TestOrbitCommand:
    def test_stats_with_k(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--stats", "IUZ~vz}}o", "--k", "4")
        assert code == 0
        row = out.strip().splitlines()[1].split("\t")
        assert row == ["IUZ~vz}}o", "EXHAUSTED", "8712", "3"]

    def test_stats_size_only(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--stats", encode(complete_graph(2)))
        assert code == 0
        assert out.strip().splitlines()[1].split("\t")[1] == "1"

    def test_list_k3(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "--list", encode(complete_graph(3)))
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        assert lines[0] == encode(complete_graph(3))
        assert all(decode(line).n == 3 for line in lines)

    def test_bad_code_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "orbit", "--stats", "\x01bad")
        assert code == 2
        assert "error" in err


class TestCertifyVerify:
    def test_roundtrip(self, capsys, tmp_path):
        cert_path = tmp_path / "g3.cert"
        code, _, _ = run_cli(
            capsys, "certify", "ICQdbh{NO", "--k", "4", "--out", str(cert_path)
        )
        assert code == 0
        text = cert_path.read_text()
        assert "orbit_size=8712" in text and "max_alpha=3" in text
        code, out, _ = run_cli(capsys, "verify", str(cert_path))
        assert code == 0
        assert out.strip() == "ok"

    def test_tampered_exit_1(self, capsys, tmp_path):
        cert_path = tmp_path / "k2.cert"
        run_cli(capsys, "certify", encode(complete_graph(2)), "--k", "2", "--out", str(cert_path))
        tampered = cert_path.read_text().replace("orbit_size=1", "orbit_size=2")
        cert_path.write_text(tampered)
        code, out, _ = run_cli(capsys, "verify", str(cert_path))
        assert code == 1
        assert "orbit_size" in out

    def test_certify_witness_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "certify", encode(empty_graph(4)), "--k", "4")
        assert code == 2
        assert "witness" in err

    def test_certify_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "certify", encode(complete_graph(2)), "--k", "2")
        assert code == 0
        assert out.startswith("code=A_\nk=2\norbit_size=1\n")


class TestGenCommand:
    def test_n7_line_count(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "7")
        assert code == 0
        assert len(out.strip().splitlines()) == 1044

    def test_n7_connected(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "7", "--connected")
        assert code == 0
        assert len(out.strip().splitlines()) == 853

    def test_n1(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "1")
        assert code == 0
        assert out.strip() == "@"

    def test_long_run_guard(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--n", "10")
        assert code == 2
        assert "long run" in err


class TestAnalyzeCommand:
    def test_six_codes_table(self, capsys):
        codes = ["ICQ`fm}~w", "ICQ`fn}no", "ICQdbh{NO", "ICQb`pzlw", "ICQb`twlw", "IUZ~vz}}o"]
        code, out, _ = run_cli(capsys, "analyze", *codes)
        assert code == 0
        lines = out.strip().splitlines()
        header = lines[0].split("\t")
        rows = {r.split("\t")[0]: dict(zip(header, r.split("\t"))) for r in lines[1:]}
        assert rows["IUZ~vz}}o"]["edges"] == "35"
        assert rows["IUZ~vz}}o"]["alpha"] == "2"
        assert rows["IUZ~vz}}o"]["chi"] == "6"
        assert rows["IUZ~vz}}o"]["named"] == "join(C5,C5)"
        assert rows["ICQdbh{NO"]["diameter"] == "3"
        assert rows["ICQdbh{NO"]["degree_sequence"] == "5,5,5,5,5,5,3,3,3,3"
        assert all(r["girth"] == "3" for r in rows.values())

    def test_construct_flag_matches_code(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--construct", "c5-join-c5")
        assert code == 0
        row = out.strip().splitlines()[1].split("\t")
        assert row[0] == encode(join(cycle_graph(5), cycle_graph(5)))
        assert row[-1] == "join(C5,C5)"

    def test_alpha_row_for_e4(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", encode(empty_graph(4)))
        assert code == 0
        header = out.splitlines()[0].split("\t")
        row = dict(zip(header, out.strip().splitlines()[1].split("\t")))
        assert row["alpha"] == "4"
        assert row["diameter"] == "inf"

    def test_no_input_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "analyze")
        assert code == 2

    def test_disconnected_markers(self, capsys):
        from vmramsey.graphs import disjoint_union

        g = disjoint_union(cycle_graph(3), cycle_graph(3))
        code, out, _ = run_cli(capsys, "analyze", encode(g))
        header = out.splitlines()[0].split("\t")
        row = dict(zip(header, out.strip().splitlines()[1].split("\t")))
        assert row["connected"] == "no"
        assert row["diameter"] == "inf"
        assert row["girth"] == "3"


class TestBoundsCommand:
    def test_table_k9(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--k-max", "9")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t") == ["k", "explicit_lower", "asymptotic_leading", "upper_2k", "known"]
        rows = [line.split("\t") for line in lines[1:]]
        assert [r[1] for r in rows] == ["3", "7", "11", "13", "17", "21", "23", "27"]
        assert [r[2] for r in rows] == ["1", "2", "5", "7", "11", "15", "20", "25"]
        assert rows[0][4] == "3" and rows[-1][4] == "-"

    def test_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--k-max", "2")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_crossover_rows_present(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--k-max", "12")
        assert code == 0
        assert len(out.strip().splitlines()) == 12
