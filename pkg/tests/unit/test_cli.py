import json

import pytest

from um2witt.__main__ import main
from um2witt.errors import IdentityFailedError
from um2witt.QuotientRing import sphere_ring
from um2witt.verification.identity_battery import IDENTITIES

CIRCLE = {"vars": ["x", "y"], "relations": ["x^2 + y^2 - 1"]}
SPHERE = {"vars": ["x", "y", "z", "w"], "relations": ["x^2 + y^2 + z^2 + w^2 - 1"]}


@pytest.fixture()
def files(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


@pytest.fixture()
def run(tmp_path, capsys):
    """Run the command line with an absent config file; return (status, stdout)."""

    def invoke(*argv):
        status = main(["-c", str(tmp_path / "none.yaml"), "-odir", str(tmp_path), *argv])
        return status, capsys.readouterr().out.strip()

    return invoke


@pytest.mark.parametrize("order", [None, "lex"])
def test_gb(run, files, order):
    options = [] if order is None else ["--order", order]
    status, out = run("gb", files("circle.json", CIRCLE), *options)
    assert status == 0
    assert out == "x^2 + y^2 - 1"


def test_gb_json(run, files):
    status, out = run("--json", "gb", files("circle.json", CIRCLE))
    document = json.loads(out)
    assert status == 0
    assert document["schema"] == "um2witt/1"
    assert document["basis"] == ["x^2 + y^2 - 1"]


def test_nf(run):
    assert run("nf", "sphere", "x1^2") == (0, "-x2^2 - x3^2 - x4^2 + 1")


def test_certify(run, files):
    good = files("good.json", {"ring": CIRCLE, "row": ["x", "y", "0"]})
    bad = files("bad.json", {"ring": {"vars": ["x", "y"]}, "row": ["x", "y", "x*y"]})
    status, out = run("certify", good, bad)
    lines = out.splitlines()
    assert status == 0
    assert lines[0].startswith(f"{good}: (")
    assert lines[1] == f"{bad}: NOT-UNIMODULAR"


def test_vsymbol_of_the_basepoint(run, files):
    ring = {"vars": ["t"]}
    row = files("e1.json", {"ring": ring, "row": [1, 0, 0], "certificate": [1, 0, 0]})
    status, out = run("vsymbol", row)
    assert status == 0
    assert out.splitlines() == [
        "[0, -1, 0, 0]",
        "[1, 0, 0, 0]",
        "[0, 0, 0, -1]",
        "[0, 0, 1, 0]",
        "Pf = 1",
    ]


def test_vsymbol_after_a_word(run, files):
    ring = {"vars": ["t"]}
    row = files("e1.json", {"ring": ring, "row": [1, 0, 0], "certificate": [1, 0, 0]})
    word = files("word.json", [{"i": 1, "j": 2, "lambda": "t"}])
    status, out = run("--json", "vsymbol", row, "--word", word)
    document = json.loads(out)
    assert status == 0
    assert document["matrix"][0] == ["0", "-1", "-t", "0"]
    assert document["pfaffian"] == "1"


def test_pfaffian(run, files):
    ring = {"vars": ["a", "b", "c", "d", "e", "f"]}
    entries = [
        ["0", "a", "b", "c"],
        ["-a", "0", "d", "e"],
        ["-b", "-d", "0", "f"],
        ["-c", "-e", "-f", "0"],
    ]
    matrix = files("m.json", {"ring": ring, "entries": entries})
    assert run("pfaffian", matrix) == (0, "c*d - b*e + a*f")


def test_map_alpha_symmetric_on_the_sphere(run, files):
    sphere = files("s.json", SPHERE)
    status, out = run("--json", "map", "--name", "alpha-symmetric", "--ring", sphere)
    ring = sphere_ring(4, ["x", "y", "z", "w"])
    expected = ["2*x*z - 2*y*w", "2*x*w + 2*y*z", "z^2 + w^2 - x^2 - y^2"]
    document = json.loads(out)
    assert status == 0
    assert document["image"] == [str(element) for element in ring.elems(expected)]
    assert document["certificate"] == document["image"]


def test_map_f_on_a_row(run, files):
    data = {"ring": {"vars": ["t"]}, "row": [1, 0, 1, 0], "certificate": [1, 0, 0, 0]}
    row = files("r.json", data)
    assert run("map", "--name", "f", "--row", row) == (0, "(1, 0, 0, 0, 1)")
    assert run("map", "--name", "H", "--row", row) == (0, "(2, 0, -1) / (0, 0, -1)")


@pytest.mark.parametrize(
    ("alpha", "expected"), [([], "(2, 0, -1)"), (["--alpha", "1"], "(2, 0, 1)")]
)
def test_map_g_on_a_point(run, files, alpha, expected):
    point = files("p.json", {"ring": {"vars": ["t"]}, "point": [1, 0, 0, 0, 1]})
    assert run("map", "--name", "g", "--point", point, *alpha) == (0, expected)


def test_map_needs_an_input(run, files):
    assert run("map", "--name", "f")[0] == 2
    assert run("map", "--name", "g", "--ring", files("s.json", SPHERE))[0] == 2


def test_verify_all(run):
    status, out = run("verify")
    lines = out.splitlines()
    assert status == 0
    assert len(lines) == len(IDENTITIES)
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_unknown_identity(run):
    assert run("verify", "hopf_degree")[0] == 2


def test_verify_failure_exit_status(run, mocker):
    def broken():
        raise IdentityFailedError("1 does not reduce to 0")

    mocker.patch.dict(
        "um2witt.verification.identity_battery.IDENTITIES", {"broken": broken}
    )
    status, out = run("verify", "broken")
    assert status == 1
    assert out == "FAIL broken: 1 does not reduce to 0"


@pytest.mark.timeout(60)
def test_hopf(run):
    status, out = run("--json", "hopf", "--map", "hopf")
    document = json.loads(out)
    assert status == 0
    assert abs(document["linking"]) == 1
    assert document["grid"] == 64


def test_hopf_irregular_value(run, files):
    data = {"vars": ["a", "b", "c", "d"], "components": ["a", "b", "2"]}
    flat = files("flat.json", data)
    assert run("hopf", "--map", flat, "--v2", "0,0,-1")[0] == 1


def test_suite_subset(run, tmp_path):
    status, out = run("suite", "--only", "f_membership", "hopf_norm")
    assert status == 0
    assert out == "2/2 criteria passed"
    assert (tmp_path / "acceptance.tap").exists()
    assert (tmp_path / "processed_config.yaml").exists()


@pytest.mark.parametrize(
    ("argv", "status"),
    [
        (["nf", "sphere", "x1 +* 2"], 2),
        (["nf", "sphere", "q^2"], 2),
        (["nf", "absent.json", "x"], 2),
        (["--budget", "1", "nf", "sphere", "x1^5"], 3),
    ],
)
def test_exit_statuses(run, argv, status):
    assert run(*argv)[0] == status
