import json

import pytest

from dyckab.cli import apply_operator_string, main, render
from dyckab.ops import BOTTOM
from dyckab.paths import DyckPath

FIGURE_ONE = "NNNEENENEENNEE"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- rendering ------------------------------------------------------------------


def test_render_staircase():
    out = render(DyckPath.from_word("NENENE"))
    assert out.splitlines() == ["...", "...", "...", "a=0 b=3"]


def test_render_full_triangle():
    out = render(DyckPath.from_word("NNNEEE"))
    assert out.splitlines() == ["##.", "#..", "...", "a=3 b=0"]


def test_render_figure_one_floating():
    out = render(DyckPath.from_word(FIGURE_ONE), show_floating=True)
    grid = out.splitlines()[:7]
    assert len(grid) == 7 and all(len(line) == 7 for line in grid)
    assert sum(line.count("o") for line in grid) == 1
    assert sum(line.count("#") for line in grid) == 5


def test_render_bounce_footer():
    out = render(DyckPath.from_word(FIGURE_ONE), show_bounce=True)
    assert "bounce alpha=(3,2,2) points=(0,3,5,7)" in out
    assert "a=6 b=6" in out


def test_render_shape_invariant():
    for word in ("NE", "NNEE", FIGURE_ONE):
        p = DyckPath.from_word(word)
        grid = render(p).splitlines()
        assert len(grid) == p.n + 1
        assert all(len(line) == p.n for line in grid[: p.n])


# -- operator strings ---------------------------------------------------------------


def test_operator_string_examples():
    assert apply_operator_string(DyckPath.from_word("NENE"), "A2").word == "NNEE"
    assert apply_operator_string(DyckPath.from_word("NNEE"), "A2^-1").word == "NENE"
    assert (
        apply_operator_string(
            DyckPath.from_composition(5, (3, 2)), "S1"
        )
        == DyckPath.from_composition(5, (2, 3))
    )


def test_operator_string_composition_and_boost():
    p = DyckPath.from_composition(5, (3, 1, 1))
    assert apply_operator_string(p, "U1,D1") == p
    assert apply_operator_string(
        DyckPath.from_composition(5, (3, 2)), "B1:1"
    ) == DyckPath.from_composition(5, (2, 3))


def test_operator_string_bottom():
    assert apply_operator_string(DyckPath.from_word("NENE"), "A1") is BOTTOM


def test_operator_string_parse_errors():
    p = DyckPath.from_word("NENE")
    for bad in ("Q1", "A", "B1", "A1:2", "B1:2^3"):
        with pytest.raises(ValueError):
            apply_operator_string(p, bad)


# -- subcommands -----------------------------------------------------------------------


def test_enum_words(capsys):
    code, out, _ = run(capsys, "enum", "--n", "3")
    assert code == 0
    assert out.splitlines() == [
        "NNNEEE",
        "NNENEE",
        "NNEENE",
        "NENNEE",
        "NENENE",
    ]


def test_enum_json(capsys):
    code, out, _ = run(capsys, "enum", "--n", "2", "--format", "json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["word"] for r in records] == ["NNEE", "NENE"]
    assert records[0]["area"] == 1 and records[0]["bounce"] == 0
    assert set(records[0]) == {
        "n", "word", "area", "bounce", "alpha",
        "bounce_points", "area_seq", "floating",
    }


def test_stats_figure_one(capsys):
    code, out, _ = run(capsys, "stats", "--path", FIGURE_ONE)
    assert code == 0
    assert "area: 6" in out
    assert "bounce: 6" in out
    assert "alpha: [3, 2, 2]" in out
    assert "floating: 1" in out


def test_op_subcommand(capsys):
    code, out, _ = run(capsys, "op", "--path", "NENE", "--apply", "A2")
    assert code == 0 and out.strip() == "NNEE"


def test_op_bottom_is_success(capsys):
    code, out, _ = run(capsys, "op", "--path", "NENE", "--apply", "A1")
    assert code == 0 and out.strip() == "bottom"


def test_phi_subcommand(capsys):
    # conjugate of (3,1,1) is (3,1,1) read down the columns: (3,1,1)' = (3,1,1)
    block = DyckPath.from_composition(5, (3, 1, 1)).word
    code, out, _ = run(capsys, "phi", "--path", block)
    assert code == 0
    assert out.strip() == DyckPath.from_composition(5, (3, 1, 1)).word


def test_phi_inverse_round_trip(capsys):
    word = DyckPath.from_composition(6, (3, 2, 1)).word
    code, out, _ = run(capsys, "phi", "--path", word)
    code2, out2, _ = run(capsys, "phi", "--path", out.strip(), "--inverse")
    assert code == code2 == 0
    assert out2.strip() == word


def test_phi_domain_error(capsys):
    code, _, err = run(capsys, "phi", "--path", "NNENENEENENE")
    assert code == 2
    assert "error" in err


def test_classify_subcommand(capsys):
    word = DyckPath.from_composition(6, (1, 3, 1, 1)).word
    code, out, _ = run(capsys, "classify", "--path", word)
    assert code == 0
    assert "kind: bounce-side" in out
    assert '"lambda": [4, 1, 1]' in out
    assert '"f": [[1, 1, 2]]' in out


def test_classify_neither(capsys):
    code, out, _ = run(capsys, "classify", "--path", "NNENENEENENE")
    assert code == 0 and "kind: neither" in out


def test_gamma_round_trip(capsys):
    sigma = "NNNNNNEEENEEEENNNEEENE"
    code, out, _ = run(capsys, "gamma", "--path", sigma)
    assert code == 0
    tau = out.strip()
    assert tau == "NNNNEENEENEENENENENNEE"
    code, out, _ = run(capsys, "gamma", "--path", tau, "--inverse")
    assert code == 0 and out.strip() == sigma


def test_minimal_subcommand(capsys):
    code, out, _ = run(capsys, "minimal", "--n", "7", "--kind", "bounce")
    assert code == 0
    assert len(out.splitlines()) == 12
    code, out, _ = run(capsys, "minimal", "--n", "7", "--kind", "area")
    assert len(out.splitlines()) == 12


def test_construct_subcommand(capsys):
    code, out, _ = run(capsys, "construct", "--n", "6", "--area", "5", "--bounce", "5")
    assert code == 0
    built = DyckPath.from_word(out.strip())
    assert built.area() == 5 and built.bounce() == 5
    code, out, _ = run(capsys, "construct", "--n", "4", "--area", "6", "--bounce", "6")
    assert code == 0 and out.strip() == "none exists"


def test_levels_csv(capsys):
    code, out, _ = run(capsys, "levels", "--n", "2", "--csv")
    assert code == 0
    assert out.splitlines() == ["area,bounce,count", "0,1,1", "1,0,1"]


def test_fqt_csv(capsys):
    code, out, _ = run(capsys, "fqt", "--n", "2", "--csv")
    assert code == 0
    assert out.splitlines() == ["area\\bounce,0,1", "0,0,1", "1,1,0"]


def test_fqt_summary(capsys):
    code, out, _ = run(capsys, "fqt", "--n", "5")
    assert code == 0
    assert "symmetric=True" in out


def test_qbell_subcommand(capsys):
    code, out, _ = run(capsys, "qbell", "--n", "3")
    assert code == 0 and out.strip() == "4 + q"


def test_sequence_d(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "d", "--count", "20")
    assert code == 0
    assert out.split() == [
        "1", "1", "1", "2", "3", "5", "8", "11", "15", "20",
        "26", "32", "39", "47", "56", "66", "76", "87", "99", "112",
    ]


def test_sequence_g(capsys):
    code, out, _ = run(capsys, "sequence", "--name", "g", "--count", "5")
    assert code == 0 and out.split() == ["0", "0", "0", "1", "2"]


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "statistics", "--n", "6")
    assert code == 0
    assert "figure-one-exact" in out
    assert "0 failed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "qbell", "--n", "6", "--json")
    assert code == 0
    for line in out.splitlines():
        record = json.loads(line)
        assert record["passed"] is True


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope", "--n", "4")
    assert code == 2 and "unknown suite" in err


def test_usage_error_bad_word(capsys):
    code, _, err = run(capsys, "stats", "--path", "ENNE")
    assert code == 2
    assert "position 1" in err


def test_render_subcommand(capsys):
    code, out, _ = run(capsys, "render", "--path", "NNNEEE")
    assert code == 0
    assert out.splitlines()[:3] == ["##.", "#..", "..."]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "dyckab.cli", "stats", "--path", FIGURE_ONE],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "area: 6" in proc.stdout
    proc = subprocess.run(
        [sys.executable, "-m", "dyckab.cli", "stats", "--path", "EN"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert proc.stderr.strip()
