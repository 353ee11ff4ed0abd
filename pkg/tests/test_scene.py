"""Scene files and the CLI: parsing, checks, exit codes, determinism."""

import pytest

from traversale.cli import main
from traversale.errors import ParseError, UnknownReference
from traversale.scene import CommandError, run_scene_text

GOOD_SCENE = """
# the worked configuration on the unit circle
conic unit 1 1 -1 0 0 0
point F 2 0 1
line tau 2 0 -1
point B 1 0 1
point C -1 0 1
point D 3/5 4/5 1
point E 5/13 12/13 1
quadrangle q conic=unit B C D E
construct polar tau2 unit F
check polar unit F = tau
check traversale unit F = tau
check classify unit = nondegenerate-real
check on unit D
check equal tau tau2
check incident B tau2   # (1,0) is not on x = 1/2: expected failure
"""


def test_scene_checks_and_verdicts():
    report = run_scene_text(GOOD_SCENE, name="worked")
    assert report.suite == "scene:worked"
    assert report.cases == 6
    verdicts = {p.name.split(" ", 1)[1]: p.passed for p in report.properties}
    assert verdicts["check polar unit F = tau"]
    assert verdicts["check traversale unit F = tau"]
    assert verdicts["check classify unit = nondegenerate-real"]
    assert verdicts["check on unit D"]
    assert verdicts["check equal tau tau2"]
    assert not verdicts["check incident B tau2"]
    assert not report.passed


def test_scene_report_is_deterministic():
    a = run_scene_text(GOOD_SCENE, name="worked").to_text()
    b = run_scene_text(GOOD_SCENE, name="worked").to_text()
    assert a == b


def test_scene_parse_error_zero_denominator():
    with pytest.raises(ParseError) as exc:
        run_scene_text("point P 1/0 2 1\n")
    assert exc.value.line == 1 and exc.value.column == 9


def test_scene_parse_error_bad_token_column():
    with pytest.raises(ParseError) as exc:
        run_scene_text("conic c 1 1 -1 0 0 oops\n")
    assert exc.value.line == 1 and exc.value.column == 20


def test_scene_unknown_reference():
    with pytest.raises(UnknownReference):
        run_scene_text("conic unit 1 1 -1 0 0 0\ncheck polar ghost F = tau\n")


def test_scene_duplicate_name():
    with pytest.raises(ParseError):
        run_scene_text("point P 1 0 1\npoint P 2 0 1\n")


def test_scene_domain_error_names_command():
    with pytest.raises(CommandError) as exc:
        run_scene_text("point P 1 0 1\npoint Q 2 0 2\nconstruct join l P Q\n")
    assert "line 3" in str(exc.value)


def test_scene_construct_commands():
    text = (
        "point P 1 1 1\npoint Q -1 1 1\n"
        "construct join l P Q\n"
        "line m 1 0 0\n"
        "construct meet X l m\n"
        "point Y 0 1 1\n"
        "check equal X Y\n"
        "conic unit 1 1 -1 0 0 0\npoint F 2 0 1\n"
        "construct traversale tau unit F\n"
        "construct polar tau2 unit F\n"
        "check equal tau tau2\n"
    )
    report = run_scene_text(text)
    assert report.passed and report.cases == 2


def test_scene_chart_and_pole_check():
    text = (
        "line xaxis 0 1 0\npoint O 0 0 1\npoint U 1 0 1\npoint I 1 0 0\n"
        "chart ax line=xaxis origin=O unit=U infinity=I\n"
        "conic unit 1 1 -1 0 0 0\nline tau 2 0 -1\npoint F 2 0 1\n"
        "check pole unit tau = F\n"
    )
    report = run_scene_text(text)
    assert report.passed and report.cases == 1


def test_scene_render_writes_file(tmp_path):
    scene = (
        "conic unit 1 1 -1 0 0 0\npoint F 2 0 1\n"
        "render scene out=out.svg viewport=-2,-2,3,2\nrender fig13 out=f13.svg\n"
    )
    report = run_scene_text(scene, name="r", base_dir=str(tmp_path))
    assert report.passed
    assert (tmp_path / "out.svg").exists() and (tmp_path / "f13.svg").exists()
    assert (tmp_path / "out.svg").read_text().startswith("<?xml")


# -- CLI ----------------------------------------------------------------------

def test_cli_polar_pole(capsys):
    assert main(["polar", "--conic", "1 1 -1 0 0 0", "--point", "(2, 0, 1)"]) == 0
    assert capsys.readouterr().out.strip() == "[1, 0, -1/2]"
    assert main(["pole", "--conic", "1 1 -1 0 0 0", "--line", "[2, 0, -1]"]) == 0
    assert capsys.readouterr().out.strip() == "(1, 0, 1/2)"


def test_cli_traversale_agreement(capsys):
    assert main(["traversale", "--conic", "1 1 -1 0 0 0", "--point", "(2, 0, 1)"]) == 0
    out = capsys.readouterr().out
    assert "agreement  exact" in out


def test_cli_involution(capsys):
    code = main(["involution", "--pair", "{2/5, -8/5}", "--pair", "{8/5, -2/5}"])
    assert code == 0
    out = capsys.readouterr().out
    assert "kind elliptic" in out and "souche 0" in out


def test_cli_classify(capsys):
    assert main(["classify", "--conic", "1 0 -1 0 0 0"]) == 0
    out = capsys.readouterr().out
    assert "class two-lines" in out and "point-double (0, 1, 0)" in out


def test_cli_bad_input_exit_2(capsys):
    assert main(["polar", "--conic", "1 1", "--point", "(2, 0, 1)"]) == 2
    assert main(["polar", "--conic", "1 1 -1 0 0 0", "--point", "(0, 0, 0)"]) == 2
    assert main(["verify", "not-a-suite"]) == 2
    capsys.readouterr()


def test_cli_run_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.scene"
    good.write_text("conic unit 1 1 -1 0 0 0\npoint F 2 0 1\nline tau 2 0 -1\ncheck polar unit F = tau\n")
    assert main(["run", str(good)]) == 0
    bad = tmp_path / "bad.scene"
    bad.write_text("conic unit 1 1 -1 0 0 0\npoint F 2 0 1\nline wrong 1 0 -1\ncheck polar unit F = wrong\n")
    assert main(["run", str(bad)]) == 1
    malformed = tmp_path / "broken.scene"
    malformed.write_text("point P 1/0 0 1\n")
    assert main(["run", str(malformed)]) == 2
    capsys.readouterr()


def test_cli_render_writes(tmp_path, capsys):
    out = tmp_path / "fig8.svg"
    assert main(["render", "fig8", "--out", str(out)]) == 0
    assert out.read_text().startswith("<?xml")
    capsys.readouterr()


def test_cli_verify_single_suite(tmp_path, capsys):
    out = tmp_path / "report.txt"
    code = main(["verify", "biduality", "--seed", "5", "--cases", "10", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    assert "suite: biduality" in text and "seed: 5" in text
    assert capsys.readouterr().out == text


def test_cli_env_seed_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DESARGUES_SEED", "123")
    assert main(["verify", "biduality", "--seed", "5", "--cases", "5"]) == 0
    assert "seed: 123" in capsys.readouterr().out
