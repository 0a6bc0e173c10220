import json

import pandas as pd
import pytest

from um2witt.errors import ConfigurationError, NotAlternatingError, NotUnimodularError
from um2witt.io.readers import (
    read_json,
    read_matrix,
    read_numeric_map,
    read_point,
    read_ring,
    read_row,
    read_word,
    resolve_ring,
)
from um2witt.io.write_report import results_table, write_report
from um2witt.io.writers import (
    SCHEMA,
    format_tap,
    generate_output_filename,
    parse_ext_string_to_list,
    to_json,
)
from um2witt.RingConfig import RingConfig

CIRCLE = {"vars": ["x", "y"], "relations": ["x^2 + y^2 - 1"]}


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def results():
    return pd.DataFrame(
        [
            {"name": "f_membership", "passed": True, "detail": "ok", "seconds": 0.5},
            {"name": "hopf_invariant", "passed": False, "detail": "", "seconds": 2.0},
        ]
    )


def test_ring_config_from_json_and_toml(tmp_path):
    json_file = write_json(tmp_path / "circle.json", CIRCLE)
    toml_file = tmp_path / "circle.toml"
    toml_file.write_text('[ring]\nvars = ["x", "y"]\nrelations = ["x^2 + y^2 - 1"]\n')
    from_json = RingConfig.from_file(json_file)
    assert from_json == RingConfig.from_file(str(toml_file))
    assert from_json.to_dict() == {**CIRCLE, "order": "degrevlex"}


def test_ring_config_needs_vars(tmp_path):
    with pytest.raises(ConfigurationError):
        RingConfig.from_dict({"relations": []})
    toml_file = tmp_path / "bad.toml"
    toml_file.write_text('[presentation]\nvars = ["x"]\n')
    with pytest.raises(ConfigurationError):
        RingConfig.from_file(str(toml_file))


def test_resolve_ring(tmp_path):
    write_json(tmp_path / "circle.json", CIRCLE)
    from_file = resolve_ring("circle.json", tmp_path)
    inline = resolve_ring(CIRCLE)
    assert from_file.variables == inline.variables == ("x", "y")
    assert str(inline.elem("x^2")) == "-y^2 + 1"
    assert resolve_ring("sphere").variables == ("x1", "x2", "x3", "x4")
    with pytest.raises(FileNotFoundError):
        resolve_ring("torus.json", tmp_path)
    with pytest.raises(ConfigurationError):
        resolve_ring(42)


def test_read_ring(tmp_path):
    ring = read_ring(write_json(tmp_path / "circle.json", CIRCLE))
    assert len(ring.gb) == 1


def test_read_json_errors(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{ring: ")
    with pytest.raises(ConfigurationError):
        read_json(str(broken))
    with pytest.raises(FileNotFoundError):
        read_json(str(tmp_path / "absent.json"))


def test_read_row_with_and_without_certificate(tmp_path):
    certified = write_json(
        tmp_path / "row.json",
        {"ring": CIRCLE, "row": ["x", "y", "0"], "certificate": ["x", "y", "0"]},
    )
    searched = write_json(
        tmp_path / "row2.json", {"ring": CIRCLE, "row": ["x", "y", "0"]}
    )
    assert read_row(certified).symmetric()
    assert read_row(searched).entries == read_row(certified).entries


def test_read_row_refutes(tmp_path):
    ring = {"vars": ["x", "y"]}
    path = write_json(tmp_path / "row.json", {"ring": ring, "row": ["x", "y", "x*y"]})
    with pytest.raises(NotUnimodularError):
        read_row(path)


@pytest.mark.parametrize(
    "data", [{"row": ["1", "0", "0"]}, {"ring": "sphere"}, ["x", "y"]]
)
def test_read_row_missing_entries(tmp_path, data):
    with pytest.raises(ConfigurationError):
        read_row(write_json(tmp_path / "row.json", data))


def test_read_word(tmp_path):
    ring = resolve_ring(CIRCLE)
    bare = write_json(tmp_path / "bare.json", [{"i": 1, "j": 2, "lambda": "y"}])
    wrapped = write_json(
        tmp_path / "word.json", {"word": [{"i": 2, "j": 3, "lambda": 2}]}
    )
    (move,) = read_word(bare, ring)
    assert (move.i, move.j, str(move.lam)) == (1, 2, "y")
    (move,) = read_word(wrapped, ring)
    assert str(move.lam) == "2"
    broken = write_json(tmp_path / "broken.json", [{"i": 1, "lambda": "y"}])
    with pytest.raises(ConfigurationError):
        read_word(broken, ring)


def test_read_matrix(tmp_path):
    entries = [["0", "x"], ["-x", "0"]]
    path = write_json(tmp_path / "m.json", {"ring": CIRCLE, "entries": entries})
    matrix = read_matrix(path)
    assert matrix.size == 2
    symmetric = write_json(
        tmp_path / "s.json", {"ring": CIRCLE, "entries": [[0, 1], [1, 0]]}
    )
    with pytest.raises(NotAlternatingError):
        read_matrix(symmetric)


def test_read_point(tmp_path):
    path = write_json(
        tmp_path / "p.json", {"ring": {"vars": ["t"]}, "point": [1, 0, 0, 0, 1]}
    )
    ring, point, alpha = read_point(path)
    assert len(point) == 5
    assert str(alpha) == "-1"
    assert ring.variables == ("t",)


def test_read_numeric_map(tmp_path):
    assert read_numeric_map("hopf").target_dim == 3
    data = {"vars": ["a", "b", "c", "d"], "components": ["a", "b", "1"]}
    path = write_json(tmp_path / "map.json", data)
    numeric = read_numeric_map(path)
    assert numeric.source_dim == 4
    assert numeric.name == path
    broken = write_json(tmp_path / "broken.json", {"vars": ["a"]})
    with pytest.raises(ConfigurationError):
        read_numeric_map(broken)


@pytest.mark.parametrize(
    ("formats", "expected"),
    [(".[csv,txt]", ["csv", "txt"]), (".tap", [".tap"]), (".[tap]", ["tap"])],
)
def test_parse_ext_string_to_list(formats, expected):
    assert parse_ext_string_to_list(formats) == expected


@pytest.mark.parametrize(
    ("filename", "extension", "expected"),
    [
        ("acceptance.[tap,txt]", "tap", "acceptance.tap"),
        ("out/report.csv", ".txt", "out/report.txt"),
    ],
)
def test_generate_output_filename(filename, extension, expected):
    assert generate_output_filename(filename, extension) == expected


def test_to_json_is_deterministic():
    text = to_json("nf", {"normal_form": "-y^2 + 1", "ring": "circle"})
    assert text == to_json("nf", {"ring": "circle", "normal_form": "-y^2 + 1"})
    document = json.loads(text)
    assert document["schema"] == SCHEMA
    assert document["command"] == "nf"


def test_format_tap(results):
    lines = format_tap(results, "suite").splitlines()
    assert lines[:3] == ["TAP version 13", "1..2", "# suite"]
    assert lines[3] == "ok 1 - f_membership"
    assert lines[4] == "  # ok"
    assert lines[5] == "not ok 2 - hopf_invariant"


def test_results_table(results):
    table = results_table(results)
    assert "PASS" in table and "FAIL" in table
    assert "2.00" in table


def test_write_report(tmp_path, results):
    formats = "report.[tap,txt,csv,xls]"
    written = write_report(results, tmp_path / "out", formats, "header")
    assert [path.name for path in written] == ["report.tap", "report.txt", "report.csv"]
    assert (tmp_path / "out" / "report.txt").read_text().startswith("header\n")
    assert len(pd.read_csv(tmp_path / "out" / "report.csv")) == 2
    assert write_report(results, tmp_path, "") == []
