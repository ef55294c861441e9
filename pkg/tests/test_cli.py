import json
import subprocess
import sys

from leapertours.cli import main
from leapertours.tour import Tour
from leapertours.validator import validate


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_json_roundtrip(capsys):
    code, out, _ = run(capsys, "build", "--width", "16", "--height", "12")
    assert code == 0
    d = json.loads(out)
    assert "metrics" not in d
    t = Tour.from_dict(d)
    assert validate(t).ok and t.dims.dims == (12, 16)
    assert Tour.from_dict(t.to_dict()) == t


def test_build_metrics(capsys):
    code, out, _ = run(capsys, "build", "--width", "30", "--height", "30", "--metrics")
    assert code == 0
    assert json.loads(out)["metrics"] == {"turns": 261, "crossings": 368}


def test_build_text_and_svg(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "--width", "16", "--height", "12", "--format", "text")
    rows = out.strip().split("\n")
    assert code == 0 and len(rows) == 12
    # bottom-left cell is visited first and printed last
    assert rows[-1].split()[0] == "0"
    svg = tmp_path / "t.svg"
    code, _, err = run(capsys, "build", "--width", "16", "--height", "12", "--format", "svg",
                       "--crossings", "--metrics", "--out", str(svg))
    text = svg.read_text()
    assert code == 0 and text.startswith("<svg") and "<polyline" in text
    crossings = json.loads(err)["crossings"]
    assert text.count("<circle") == crossings


def test_build_variants(capsys):
    code, out, _ = run(capsys, "build", "--width", "17", "--height", "13", "--odd-missing-corner")
    t = Tour.from_dict(json.loads(out))
    assert code == 0 and validate(t, t.missing).ok and t.missing == ((0, 0),)
    code, out, _ = run(capsys, "build", "--width", "38", "--symmetric")
    assert code == 0 and len(json.loads(out)["cells"]) == 38 * 38
    code, out, _ = run(capsys, "build", "--dims", "12,16,3", "--metrics")
    d = json.loads(out)
    assert code == 0 and d["metrics"]["crossings"] is None
    code, out, _ = run(capsys, "build", "--width", "52", "--height", "30", "--leaper", "1,4")
    assert code == 0 and validate(Tour.from_dict(json.loads(out))).ok


def test_unsupported_exit_2(capsys):
    assert run(capsys, "build", "--width", "30", "--height", "50", "--leaper", "1,4")[0] == 2
    assert run(capsys, "build", "--width", "14", "--height", "12")[0] == 2
    assert run(capsys, "build", "--width", "30", "--height", "30", "--leaper", "2,3")[0] == 2
    assert run(capsys, "oracle", "--width", "8", "--height", "8")[0] == 2


def test_bad_input_exit_1(capsys):
    code, _, err = run(capsys, "build", "--width", "x", "--height", "12")
    assert code == 1 and "usage" in err
    assert run(capsys, "build", "--width", "16")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "index", "--width", "16", "--height", "12", "--at", "999")[0] == 1


def test_verify(tmp_path, capsys):
    _, out, _ = run(capsys, "build", "--width", "16", "--height", "12")
    good = tmp_path / "good.json"
    good.write_text(out)
    code, out2, _ = run(capsys, "verify", str(good))
    res = json.loads(out2)
    assert code == 0 and res["verdict"]["ok"] and res["metrics"]["turns"] > 0
    d = json.loads(out)
    d["cells"][3], d["cells"][40] = d["cells"][40], d["cells"][3]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    code, out3, _ = run(capsys, "verify", str(bad))
    assert code == 1 and json.loads(out3)["verdict"]["kind"] == "illegal_move"
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "verify", str(junk))[0] == 1


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "crossings")
    d = json.loads(out)
    assert code == 0 and d["nodes"] == 216 and d["mean_per_triplet"] == "3"


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--width", "6", "--height", "4")
    assert code == 0 and json.loads(out)["exists"] is False
    code, out, _ = run(capsys, "oracle", "--width", "5", "--height", "6", "--metric", "TURNS")
    d = json.loads(out)
    assert d["value"] == 28 and d["optimal"]


def test_index(capsys):
    code, out, _ = run(capsys, "index", "--width", "30", "--height", "30", "--at", "100")
    cell = json.loads(out)["cell"]
    code2, out2, _ = run(capsys, "index", "--width", "30", "--height", "30", "--cell", "%d,%d" % tuple(cell))
    assert code == code2 == 0 and json.loads(out2)["index"] == 100


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "leapertours", "build", "--width", "16", "--height", "12"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert len(json.loads(p.stdout)["cells"]) == 192


def test_svg_well_formed():
    import xml.etree.ElementTree as ET

    from leapertours import build_wh
    from leapertours.cli import render_svg

    t = build_wh(16, 12)
    root = ET.fromstring(render_svg(t, cell_size=10, crossings=True))
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg" and root.get("width") == "160"
    poly = root.findall(ns + "polyline")
    assert len(poly) == 1 and len(poly[0].get("points").split()) == len(t)
    assert len(root.findall(ns + "line")) == 1
