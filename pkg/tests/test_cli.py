import pytest

from skewhecke.cli import (
    ConfigError,
    build_context,
    format_hecke_element,
    main,
    parse_config,
    parse_hecke_element,
)
from skewhecke.groups import CosetSpace
from skewhecke.hecke import classical_structure_constants_counting
from skewhecke.scalars import Rationals

CLASSICAL = """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = scalar
action = trivial
"""

POLY = """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = polynomial(3)
action = permute_variables
degree_cap = 2
"""

STONE = """\
field = rationals
group = symmetric(3)
subgroup = (1 2)
algebra = functions
action = left_translation
"""


@pytest.fixture
def cfg_file(tmp_path):
    def write(text, name="job.cfg"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


# -- configuration -----------------------------------------------------------


def test_parse_config_canonical_roundtrip():
    for text in (CLASSICAL, POLY, STONE):
        cfg = parse_config(text)
        assert parse_config(cfg.canonical()) == cfg


def test_parse_config_comments_and_defaults():
    cfg = parse_config("# just a comment\nfield = rationals\n")
    assert cfg.group == "symmetric(3)"
    assert cfg.degree_cap == 2


def test_parse_config_errors():
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config("colour = blue\n")
    with pytest.raises(ConfigError, match="expected 'key = value'"):
        parse_config("field rationals\n")
    with pytest.raises(ConfigError, match="integer"):
        parse_config("degree_cap = two\n")


def test_build_context_rejects_bad_specs():
    cfg = parse_config(CLASSICAL)
    cfg.algebra = "octonion"
    with pytest.raises(ConfigError):
        build_context(cfg)
    cfg = parse_config(CLASSICAL)
    cfg.action = "mystery"
    with pytest.raises(ConfigError):
        build_context(cfg)


# -- element literals --------------------------------------------------------


def test_hecke_literal_roundtrip():
    built = build_context(parse_config(POLY))
    ctx = built.ctx
    phi = parse_hecke_element(ctx, "(x1 + x2; 2*x3 + -1)")
    assert parse_hecke_element(ctx, format_hecke_element(phi)) == phi


def test_hecke_literal_wrong_arity():
    built = build_context(parse_config(CLASSICAL))
    with pytest.raises(ValueError, match="expected 2"):
        parse_hecke_element(built.ctx, "(1; 2; 3)")


# -- subcommands -------------------------------------------------------------


def test_dims_output(capsys, cfg_file):
    code, out = run_cli(capsys, "dims", "--config", cfg_file(CLASSICAL))
    assert code == 0
    assert "|G| = 6" in out
    assert "[G:H] = 3" in out
    assert "double cosets = 2" in out
    assert "dim = 2" in out


def test_mul_classical_square(capsys, cfg_file):
    code, out = run_cli(
        capsys, "mul", "(0; 1)", "(0; 1)", "--config", cfg_file(CLASSICAL)
    )
    assert code == 0
    assert out.strip() == "(2; 1)"


def test_mul_polynomial_square(capsys, cfg_file):
    # (0, x1)^2 = (x1^2 + x2^2, x2*x3) in the two-value normal form
    path = cfg_file(POLY)
    code, out = run_cli(capsys, "mul", "(0; x1)", "(0; x1)", "--config", path)
    assert code == 0
    ctx = build_context(parse_config(POLY)).ctx
    result = parse_hecke_element(ctx, out.strip())
    A = ctx.A
    x1, x2, x3 = (A.variable(i) for i in (1, 2, 3))
    assert result == ctx.from_values({0: x1 * x1 + x2 * x2, 1: x2 * x3})


def test_sc_matches_counting_oracle(capsys, cfg_file):
    code, out = run_cli(capsys, "sc", "--config", cfg_file(CLASSICAL))
    assert code == 0
    computed = {}
    for line in out.splitlines():
        if line.startswith("#"):
            continue
        i, j, k, c = line.split("\t")
        computed[(int(i), int(j), int(k))] = Rationals().parse(c)
    ctx = build_context(parse_config(CLASSICAL)).ctx
    oracle = classical_structure_constants_counting(
        Rationals(), CosetSpace(ctx.G, ctx.H)
    )
    assert computed == oracle


# -- verify ------------------------------------------------------------------


def test_verify_all_classical(capsys, cfg_file):
    code, out = run_cli(
        capsys, "verify", "all", "--config", cfg_file(CLASSICAL), "--seed", "0"
    )
    assert code == 0
    assert "FAIL" not in out
    assert "failed = 0" in out


def test_verify_deterministic(capsys, cfg_file):
    path = cfg_file(STONE)
    _, out1 = run_cli(capsys, "verify", "all", "--config", path, "--seed", "3")
    _, out2 = run_cli(capsys, "verify", "all", "--config", path, "--seed", "3")
    assert out1 == out2
    assert "seed = 3" in out1


def test_verify_stone_runs_on_function_config(capsys, cfg_file):
    code, out = run_cli(capsys, "verify", "stone", "--config", cfg_file(STONE))
    assert code == 0
    assert "stone.matrix_units: PASS" in out
    assert "stone.rank_discrepancy_flag: PASS" in out


def test_verify_stone_skipped_elsewhere(capsys, cfg_file):
    code, out = run_cli(capsys, "verify", "stone", "--config", cfg_file(CLASSICAL))
    assert code == 0
    assert "stone: SKIP" in out
    assert "failed = 0" in out


def test_verify_out_file(tmp_path, capsys, cfg_file):
    out_path = tmp_path / "report.txt"
    code, out = run_cli(
        capsys,
        "verify",
        "assoc",
        "--config",
        cfg_file(CLASSICAL),
        "--out",
        str(out_path),
    )
    assert code == 0
    assert out == ""
    assert "assoc.unit: PASS" in out_path.read_text()


def test_flags_accepted_before_subcommand(capsys, cfg_file):
    path = cfg_file(CLASSICAL)
    code, out = run_cli(capsys, "--config", path, "dims")
    assert code == 0
    assert "|G| = 6" in out


def test_bad_config_exits_2(capsys, cfg_file):
    code = main(["dims", "--config", cfg_file("group = monster(1)\n")])
    capsys.readouterr()
    assert code == 2


def test_bad_literal_exits_2(capsys, cfg_file):
    code = main(
        ["mul", "(0; y1)", "(0; 1)", "--config", cfg_file(POLY)]
    )
    capsys.readouterr()
    assert code == 2
