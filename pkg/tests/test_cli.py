import csv
import io
import subprocess
import sys

import numpy as np
import pytest

from fracnabla.cli import CONFIG_DIR, ConfigError, load_problem, run
from fracnabla.grid import GridFunction
from fracnabla.output import emit_csv, emit_svg
from fracnabla.solver import ProblemSpec, Solution, eigen_rl, solve

EX41 = """
# Example 4.1
kind = rl
alpha = 0.5
a = -1/2^(t+1)
f = 0
u0 = 1
horizon = 100
"""


def solution_of(values, kind="single_rl"):
    p = ProblemSpec(kind, 0.5, 0.0, 0.0, values[0], max(len(values) - 1, 1))
    return Solution(values=GridFunction(values), problem=p)


def test_load_example_41():
    p = load_problem(EX41)
    assert p.kind == "single_rl" and p.horizon == 100
    assert p.coeff_a(3) == -1 / 16
    assert p.forcing(7) == 0.0


def test_load_example_42_forcing():
    p = load_problem(EX41.replace("f = 0", "f = 1/(2*(t+1))"))
    assert p.forcing(1) == 0.25


@pytest.mark.parametrize(
    ("text", "key"),
    [
        (EX41.replace("alpha = 0.5", ""), "alpha"),
        (EX41 + "colour = red\n", "colour"),
        (EX41 + "beta = 1.5\n", "beta"),
        (EX41.replace("alpha = 0.5", "alpha = 1.5"), "alpha"),
        (EX41.replace("alpha = 0.5", "alpha = half"), "alpha"),
        (EX41.replace("f = 0", "f = 1/(t-5)"), "f"),
        (EX41.replace("f = 0", "f = (t"), "f"),
        (EX41.replace("a = -1/2^(t+1)", "a = -1"), "a"),
        (EX41.replace("kind = rl", "kind = delta"), "kind"),
        (EX41.replace("horizon = 100", "horizon = 0"), "horizon"),
        (EX41 + "u0 = 2\n", "u0"),
    ],
)
def test_config_errors_name_key(text, key):
    with pytest.raises(ConfigError) as info:
        load_problem(text)
    assert info.value.key == key


def test_evaluation_failure_names_t():
    with pytest.raises(ConfigError, match="t=5"):
        load_problem(EX41.replace("f = 0", "f = 1/(t-5)"))


def test_emit_csv_format():
    assert emit_csv(solution_of([1.0, 1 / 3])) == "t,u\n0,1\n1,0.3333333333333333\n"


def test_emit_csv_round_trip():
    sol = eigen_rl(0.5, -0.5, 100)
    rows = list(csv.reader(io.StringIO(emit_csv(sol))))
    assert rows[0] == ["t", "u"]
    assert len(rows) == 102
    values = np.array([float(u) for _, u in rows[1:]])
    assert np.array_equal(values, sol.values.values)


def test_emit_svg_shapes():
    svg = emit_svg(eigen_rl(0.5, 0.5, 100))
    assert svg.startswith("<svg") and svg.count("<polyline") == 1
    points = svg.split('points="')[1].split('"')[0].split()
    assert len(points) == 101
    ys = [float(p.split(",")[1]) for p in points[1:]]
    # svg y grows downwards: a decaying curve has increasing y
    assert all(b >= a for a, b in zip(ys, ys[1:]))

    flat = emit_svg(solution_of([2.0, 2.0, 2.0]), width=200, height=100)
    flat_pts = flat.split('points="')[1].split('"')[0].split()
    assert {p.split(",")[1] for p in flat_pts} == {"50.00"}

    two = emit_svg(solution_of([0.0, 1.0]))
    assert len(two.split('points="')[1].split('"')[0].split()) == 2
    with pytest.raises(ValueError):
        emit_svg(Solution(values=GridFunction([1.0]), problem=solution_of([1.0, 1.0]).problem))


def test_emit_svg_is_deterministic():
    assert emit_svg(eigen_rl(0.5, 0.5, 50)) == emit_svg(eigen_rl(0.5, 0.5, 50))


def test_solve_writes_outputs(tmp_path, capsys):
    cfg = tmp_path / "ex41.cfg"
    cfg.write_text(EX41)
    out_csv, out_svg = tmp_path / "out.csv", tmp_path / "out.svg"
    assert run(["solve", "--config", str(cfg), "--csv", str(out_csv), "--svg", str(out_svg)]) == 0
    lines = out_csv.read_text().splitlines()
    assert len(lines) == 102 and lines[0] == "t,u"
    assert "ex41" in out_svg.read_text()
    assert "residual_max=" in capsys.readouterr().err


def test_solve_to_stdout(tmp_path, capsys):
    cfg = tmp_path / "p.cfg"
    cfg.write_text(EX41.replace("horizon = 100", "horizon = 2"))
    assert run(["solve", "--config", str(cfg)]) == 0
    assert capsys.readouterr().out.startswith("t,u\n0,1\n")


def test_verify_prints_residual(capsys):
    assert run(["verify", "--config", str(CONFIG_DIR / "fig7_relaxation.cfg")]) == 0
    out = capsys.readouterr().out
    assert float(out.split("residual_max=")[1].split()[0]) <= 1e-9


def test_exit_codes(tmp_path, capsys):
    assert run([]) == 1
    assert run(["solve"]) == 1
    assert run(["solve", "--config", str(tmp_path / "missing.cfg")]) == 1
    bad = tmp_path / "bad.cfg"
    bad.write_text(EX41.replace("alpha = 0.5", ""))
    assert run(["verify", "--config", str(bad)]) == 1
    # a tolerance no floating point residual can meet
    assert run(["verify", "--config", str(CONFIG_DIR / "fig7_relaxation.cfg"), "--tol", "-1"]) == 2


def test_weights_command(capsys):
    assert run(["weights", "--mu", "-1.5", "--count", "4"]) == 0
    assert capsys.readouterr().out == "k,h\n1,1\n2,-0.5\n3,-0.125\n4,-0.0625\n"
    assert run(["weights", "--mu", "-2", "--count", "3"]) == 0
    assert capsys.readouterr().out == "k,h\n1,1\n2,-1\n3,0\n"
    assert run(["weights", "--mu", "0.5", "--count", "-1"]) == 1


def test_console_script_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-c", "from fracnabla.cli import main; main()",
         "weights", "--mu", "-0.5", "--count", "3"],
        capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0
    assert result.stdout == "k,h\n1,1\n2,0.5\n3,0.375\n"
