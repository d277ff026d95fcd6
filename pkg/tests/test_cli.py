import subprocess
import sys
from pathlib import Path

import pytest

from nonlocal_helmholtz.cli import build_parser, main
from nonlocal_helmholtz.driver import CSV_HEADER

DATA = Path(__file__).parent / "data"
SUBCOMMANDS = ("solve", "study-convergence", "study-iterations", "study-domain", "check-greens", "check-kernels")


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_smoke(capsys):
    code, out, err = run(["solve", "--geometry", "annulus", "--kappa", "1", "--degree", "1"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(CSV_HEADER) and len(lines) == 2
    assert "converged=True" in err


def test_solve_to_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out, _ = run(["solve", "--n-radial", "2", "--n-angular", "16", "--output", str(path)], capsys)
    assert code == 0
    assert path.read_bytes().startswith(b"h,ndofs,")
    assert "L2=" in out


def test_degree_three_is_invalid(capsys):
    code, _, err = run(["solve", "--degree", "3"], capsys)
    assert code == 2
    assert "supported degrees are 1 and 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--bc", "pml"],
        ["solve", "--pc", "amg"],
        ["solve", "--geometry", "gmsh"],
        ["solve", "--geometry", "gmsh", "--mesh", "/nonexistent.msh"],
        ["solve", "--geometry", "square_frame", "--n", "3"],
        ["study-iterations", "--pcs", "direct,amg", "--levels", "1"],
        ["solve", "--jobs", "0"],
    ],
)
def test_invalid_configuration_exit_code(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_bad_mesh_file_exit_code(capsys):
    code, _, err = run(["solve", "--geometry", "gmsh", "--mesh", str(DATA / "open_gamma.msh")], capsys)
    assert code == 2 and "closed loop" in err


def test_gmsh_geometry(capsys):
    code, out, _ = run(["solve", "--geometry", "gmsh", "--mesh", str(DATA / "valid_frame.msh"), "--level", "2"], capsys)
    assert code == 0 and len(out.strip().split("\n")) == 2


def test_unknown_flag():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--bogus"])
    assert exc.value.code == 2


def test_nonconvergence_exit_code(capsys):
    code, _, _ = run(["solve", "--n-radial", "2", "--n-angular", "16", "--pc", "none", "--maxit", "2"], capsys)
    assert code == 1


def test_check_greens(capsys):
    code, out, _ = run(["check-greens", "--geometry", "annulus", "--n-angular", "256", "--q", "16"], capsys)
    assert code == 0 and "pass" in out
    code, out, _ = run(["check-greens", "--n-angular", "16", "--q", "1", "--tol", "1e-12"], capsys)
    assert code == 1 and "FAIL" in out


def test_check_kernels(capsys):
    code, out, _ = run(["check-kernels", "--seed", "4"], capsys)
    assert code == 0
    assert {line.split(":")[0] for line in out.strip().split("\n")} == {"K", "dK_dny", "rhs", "Ktilde"}


def test_identical_argv_identical_bytes(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        argv = ["study-convergence", "--n-radial", "2", "--n-angular", "16", "--levels", "2", "--output", str(p)]
        assert run(argv, capsys)[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_study_iterations_rows(capsys):
    argv = ["study-iterations", "--n-radial", "2", "--n-angular", "16", "--levels", "2",
            "--kappas", "1,2", "--pcs", "direct,none"]
    code, out, _ = run(argv, capsys)
    rows = out.strip().split("\n")[1:]
    assert code == 0 and len(rows) == 8
    assert [r.split(",")[5] for r in rows] == ["direct"] * 4 + ["none"] * 4


def test_study_domain(tmp_path, capsys):
    argv = ["study-domain", "--sides", "2.5,4", "--h", "0.25", "--mesh-dir", str(tmp_path / "meshes")]
    code, out, _ = run(argv, capsys)
    assert code == 0 and len(out.strip().split("\n")) == 3
    assert len(list((tmp_path / "meshes").iterdir())) == 2


@pytest.mark.parametrize("command", SUBCOMMANDS)
def test_help_lists_defaults(command):
    parser = build_parser()
    sub = parser._subparsers._group_actions[0].choices[command]
    text = " ".join(sub.format_help().split())
    for action in sub._actions:
        if action.dest == "help":
            continue
        assert any(opt in text for opt in action.option_strings)
        assert f"(default: {action.default})" in text


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nonlocal_helmholtz", "--help"], capture_output=True, text=True)
    assert res.returncode == 0
    for command in SUBCOMMANDS:
        assert command in res.stdout
