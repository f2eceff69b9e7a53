import json

import pytest

from skeletron import io_json
from skeletron.cli import run
from skeletron.metric_graph import MetricGraph

T_FUNC = {"lead_val": "0", "factors": [{"root": [], "mult": 1}]}
WORKED_FUNC = {
    "lead_val": "0",
    "factors": [
        {"root": [], "mult": 1},
        {"root": [{"exp": "1", "coeff": "1"}], "mult": 1},
        {"root": [{"exp": "0", "coeff": "1"}], "mult": -2},
    ],
}
WORKED_PUNCTURES = [
    {"type": 1, "value": []},
    {"type": 1, "value": [{"exp": "1", "coeff": "1"}]},
    {"type": 1, "value": [{"exp": "0", "coeff": "1"}]},
    {"type": 1, "value": "inf"},
]


def test_tate(capsys):
    assert run(["tate", "--val-j=-5/1"]) == 0
    data = json.loads(capsys.readouterr().out)
    g = io_json.graph_from_json(data)
    assert g.edges == (("v0", "v0", 5),)
    assert g.vertices == (("v0", 0),)


def test_newton(capsys):
    f = {"terms": [{"n": 0, "v": "1"}, {"n": 1, "v": "0"}]}
    assert run(["newton", "--f", json.dumps(f), "--interval", "0,3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["breakpoints"] == [
        {"s": "1", "slope_left": 1, "slope_right": 0}
    ]
    assert data["unit"] is None

    assert run(["newton", "--f", json.dumps(f), "--interval", "2,+inf"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["breakpoints"] == []
    assert data["unit"] == {"d": 0, "val_alpha": "1"}


def test_eval(capsys):
    point = {"type": 2, "center": [], "s": "0"}
    assert run(["eval", "--f", json.dumps(T_FUNC), "--point",
                json.dumps(point)]) == 0
    assert json.loads(capsys.readouterr().out) == {"val": "0"}


def test_skeleton_roundtrip(capsys):
    assert run(["skeleton", "--punctures", json.dumps(WORKED_PUNCTURES)]) == 0
    data = json.loads(capsys.readouterr().out)
    g = io_json.graph_from_json(data["graph"])
    assert len(g.vertices) == 2 and len(g.edges) == 1 and len(g.rays) == 4
    for p in data["placement"].values():
        io_json.point_from_json(p)  # re-parses cleanly


def test_slope_check_pass_and_plot(tmp_path, capsys):
    plot = tmp_path / "slopes.tsv"
    code = run([
        "slope-check",
        "--f", json.dumps(WORKED_FUNC),
        "--punctures", json.dumps(WORKED_PUNCTURES),
        "--samples", "10",
        "--seed", "4",
        "--emit-plot", str(plot),
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "pass"
    assert data["degree_sum"] == 0
    lines = plot.read_text().strip().splitlines()
    assert lines[0].split("\t") == ["edge", "slope", "length", "delta_F"]
    assert len(lines) == 2  # one edge


def test_stabilize_chi_zero_exit_2(capsys):
    circle = io_json.graph_to_json(
        MetricGraph.make([("v", 0)], [("v", "v", 5)])
    )
    assert run(["stabilize", "--graph", json.dumps(circle)]) == 2
    err = capsys.readouterr().err
    assert "non-unique" in err


def test_stabilize_success(capsys):
    g = io_json.graph_to_json(
        MetricGraph.make(
            [("v1", 0), ("v2", 2)], [("v1", "v2", 3)], [("v1", "p")]
        )
    )
    assert run(["stabilize", "--graph", json.dumps(g)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["steps"] == [{"rule": "valence2", "vertex": "v1"}]
    out = io_json.graph_from_json(data["output"])
    assert out.vertices == (("v2", 2),)


def test_malformed_json_exit_2(capsys):
    assert run(["tate", "--val-j", "abc"]) == 2
    capsys.readouterr()
    assert run(["newton", "--f", "{not json", "--interval", "0,1"]) == 2
    assert "line" in capsys.readouterr().err


def test_missing_file_exit_2(capsys):
    assert run(["newton", "--f", "/no/such/file.json",
                "--interval", "0,1"]) == 2


def test_file_input(tmp_path, capsys):
    p = tmp_path / "f.json"
    p.write_text(json.dumps(T_FUNC))
    point = {"type": 2, "center": [], "s": "3"}
    assert run(["eval", "--f", str(p), "--point", json.dumps(point)]) == 0
    assert json.loads(capsys.readouterr().out) == {"val": "3"}


def test_unknown_subcommand_exit_2():
    assert run(["frobnicate"]) == 2


@pytest.mark.parametrize("graph_kind", ["circle", "good"])
def test_tate_roundtrip(graph_kind, capsys):
    arg = "-1/2" if graph_kind == "circle" else "3"
    assert run(["tate", f"--val-j={arg}"]) == 0
    g = io_json.graph_from_json(json.loads(capsys.readouterr().out))
    assert io_json.graph_from_json(io_json.graph_to_json(g)) == g
