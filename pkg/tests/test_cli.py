import numpy as np

from zklat import fileio
from zklat.cli import EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, main
from zklat.lattice import Lattice


def test_verify_code(capsys):
    assert main(["verify", "C_13_12"]) == EXIT_OK
    assert "self-dual = True" in capsys.readouterr().out


def test_verify_seed_and_lattice(capsys):
    assert main(["verify", "D6_seed"]) == EXIT_OK
    assert main(["verify", "D12_plus"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "unimodular = True" in out


def test_unknown_id_is_refuted(capsys):
    assert main(["verify", "nonsense"]) == EXIT_REFUTED
    assert "error:" in capsys.readouterr().err


def test_dmin_prints_classification(capsys):
    assert main(["dmin", "C_13_12"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "d_E = 26" in out and "extremal" in out


def test_dmin_budget_maps_to_unknown(capsys):
    assert main(["dmin", "C_13_12", "--budget", "10"]) == EXIT_UNKNOWN
    assert "budget exceeded" in capsys.readouterr().out


def test_lattice_and_minnorm_from_file(tmp_path, capsys):
    out = tmp_path / "lat.txt"
    assert main(["lattice", "C_13_12", "--out", str(out)]) == EXIT_OK
    assert main(["minnorm", str(out)]) == EXIT_OK
    assert "min norm = 2" in capsys.readouterr().out


def test_theta_output(tmp_path, capsys):
    out = tmp_path / "theta.txt"
    assert main(["theta", "D12_plus", "--max-norm", "2", "--out", str(out)]) == EXIT_OK
    assert fileio.load_theta(fileio.read_text(str(out)))[2] == 264


def test_shadow_and_neighbors(capsys):
    assert main(["shadow", "D12_plus"]) == EXIT_OK
    lat = Lattice(np.eye(8, dtype=np.int64), 1)
    text = fileio.dump_lattice(lat)
    import tempfile, os

    with tempfile.TemporaryDirectory() as d:
        p = os.path.join(d, "z8.txt")
        fileio.write_text(p, text)
        assert main(["neighbors", p]) == EXIT_OK


def test_frame_build_and_scale(tmp_path, capsys):
    fr = tmp_path / "frame.txt"
    assert main(["frame-build", "D6_seed", "--abcd", "0,0,3,0", "--out", str(fr)]) == EXIT_OK
    assert "3-frame" in capsys.readouterr().out
    assert main(["frame-scale", str(fr), "--m", "2"]) == EXIT_OK
    assert "6-frame" in capsys.readouterr().out


def test_frame_find_exit_codes(tmp_path, capsys):
    z2 = Lattice(np.eye(2, dtype=np.int64), 1)
    p = tmp_path / "z2.txt"
    fileio.write_text(p, fileio.dump_lattice(z2))
    assert main(["frame-find", str(p), "--k", "1"]) == EXIT_OK
    assert main(["frame-find", str(p), "--k", "3"]) == EXIT_REFUTED
    assert "none (exhaustive)" in capsys.readouterr().out


def test_rep_search(capsys):
    assert main(["rep-search", "--case", "a", "--p", "3"]) == EXIT_OK
    assert main(["rep-search", "--case", "a", "--p", "7"]) == EXIT_REFUTED
    assert "none (exhaustive)" in capsys.readouterr().out


def test_star(capsys):
    assert main(["star", "--row", "D4_5", "--k", "11"]) == EXIT_OK
    # every prime factor of 35 sits in the excluded basis for this row
    assert main(["star", "--row", "D4_5", "--k", "35"]) == EXIT_REFUTED


def test_report_exit_codes(capsys):
    assert main(["report", "D4_5", "--k", "5"]) == EXIT_OK
    assert main(["report", "D20", "--k", "3"]) == EXIT_REFUTED
    assert main(["report", "L48", "--k", "17"]) == EXIT_UNKNOWN


def test_bound(capsys):
    assert main(["bound", "--n", "20", "--k", "5"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("10")
    assert main(["bound", "--n", "48", "--k", "4", "--type1"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("20")


def test_reproduce_fig1(capsys):
    assert main(["reproduce", "fig1"]) == EXIT_OK
    assert "Cp_4_20: self-dual True" in capsys.readouterr().out


def test_reproduce_table1(capsys):
    assert main(["reproduce", "table1"]) == EXIT_OK
    assert "D24_seed: ok" in capsys.readouterr().out
