import csv
import json

import numpy as np
import pytest

from paley_etf.cli import main
from paley_etf.constructions import paley_frame, zauner_frame
from paley_etf.errors import FrameFormatError
from paley_etf.finite_field import make_field
from paley_etf.frame_io import dumps_frame, loads_frame, read_frame, write_frame


def generate(tmp_path, name, *args):
    out = tmp_path / name
    code = main(["generate", *args, "--out", str(out)])
    return code, out


def test_frame_round_trip_is_byte_identical(tmp_path):
    f = zauner_frame(make_field(3, 2), 2)
    text = dumps_frame(f)
    g = loads_frame(text)
    assert dumps_frame(g) == text
    assert np.array_equal(g.synthesis, f.synthesis)
    assert g.field == f.field and g.parameters == f.parameters
    write_frame(g, tmp_path / "z.json")
    assert (tmp_path / "z.json").read_text() == text


def test_frame_file_schema():
    data = json.loads(dumps_frame(paley_frame(make_field(7))))
    assert data["format_version"] == 1
    assert (data["n"], data["d"]) == (7, 4)
    assert data["construction"] == "paley-upper"
    assert data["field"] == {"p": 7, "m": 1, "modulus": [0, 1]}
    assert np.array(data["vectors"]).shape == (7, 4, 2)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("vectors"),
    lambda d: d.update(n=8),
    lambda d: d.update(format_version=2),
    lambda d: d.update(construction="hadamard"),
    lambda d: d["vectors"][0].pop(),
    lambda d: d.update(parameters={"bogus": 1}),
    lambda d: d["vectors"][0][0].__setitem__(0, "x"),
])
def test_malformed_frames_rejected(mutate):
    data = json.loads(dumps_frame(paley_frame(make_field(3))))
    mutate(data)
    with pytest.raises(FrameFormatError):
        loads_frame(json.dumps(data))


def test_generate_paley7(tmp_path, capsys):
    code, out = generate(tmp_path, "p7.json", "--construction", "paley-upper", "--n", "7")
    assert code == 0
    text = capsys.readouterr().out
    assert "(7, 4)" in text and "1/8" in text and "PASS" in text
    f = read_frame(out)
    assert (f.n, f.d) == (7, 4)


def test_generate_conference15(tmp_path):
    code, out = generate(tmp_path, "c15.json", "--construction", "conference-upper", "--n", "15")
    assert code == 0
    assert (read_frame(out).n, read_frame(out).d) == (15, 8)


def test_generate_paley15_is_usage_error(tmp_path, capsys):
    code, out = generate(tmp_path, "x.json", "--construction", "paley-upper", "--n", "15")
    assert code == 2
    assert "15 is not a prime power; use --construction conference" in capsys.readouterr().err
    assert not out.exists()


@pytest.mark.parametrize("args", [
    ["--construction", "paley-lower", "--n", "5"],
    ["--construction", "zauner", "--n", "16"],
    ["--construction", "conference-lower", "--n", "9"],
    ["--construction", "conference-etf", "--k", "1"],
    ["--construction", "drop-one-canonical", "--q", "7", "--drop-index", "9"],
    ["--construction", "zauner", "--q", "7", "--character-c", "0"],
    ["--construction", "paley-upper"],
])
def test_generate_usage_errors(tmp_path, args):
    code, _ = generate(tmp_path, "x.json", *args)
    assert code == 2


@pytest.mark.parametrize("args, shape", [
    (["--construction", "paley-lower", "--p", "3", "--m", "3"], (27, 13)),
    (["--construction", "zauner", "--n", "6"], (6, 3)),
    (["--construction", "zauner", "--q", "9", "--character-c", "4"], (10, 5)),
    (["--construction", "drop-one-canonical", "--n", "11"], (11, 6)),
    (["--construction", "drop-one-canonical", "--k", "3"], (7, 4)),
    (["--construction", "conference-etf", "--n", "8"], (8, 4)),
    (["--construction", "conference-lower", "--k", "3"], (7, 3)),
])
def test_generate_variants(tmp_path, args, shape):
    code, out = generate(tmp_path, "f.json", *args)
    assert code == 0
    f = read_frame(out)
    assert (f.n, f.d) == shape
    assert main(["verify", str(out)]) == 0


def test_generate_is_deterministic(tmp_path):
    _, a = generate(tmp_path, "a.json", "--construction", "paley-upper", "--n", "27")
    _, b = generate(tmp_path, "b.json", "--construction", "paley-upper", "--n", "27")
    assert a.read_bytes() == b.read_bytes()


def test_verify_good_file(tmp_path, capsys):
    _, out = generate(tmp_path, "p7.json", "--construction", "paley-upper", "--n", "7")
    capsys.readouterr()
    assert main(["verify", str(out)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] is True


def test_verify_zeroed_vector(tmp_path, capsys):
    _, out = generate(tmp_path, "p7.json", "--construction", "paley-upper", "--n", "7")
    data = json.loads(out.read_text())
    data["vectors"][3] = [[0.0, 0.0]] * 4
    out.write_text(json.dumps(data))
    capsys.readouterr()
    assert main(["verify", str(out)]) == 1
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    failing = [c["name"] for c in report["checks"] if not c["pass"]]
    assert "unit_norm" in failing
    assert "unit_norm" in captured.err


def test_verify_truncated_file(tmp_path):
    _, out = generate(tmp_path, "p7.json", "--construction", "paley-upper", "--n", "7")
    out.write_text(out.read_text()[:200])
    assert main(["verify", str(out)]) == 2
    assert main(["verify", str(tmp_path / "missing.json")]) == 2


def read_catalog(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_catalog_max7(tmp_path):
    out = tmp_path / "cat.csv"
    assert main(["catalog", "--max-n", "7", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "n,d,construction,target_overlap_sq,verified"
    rows = read_catalog(out)
    got = {(int(r["n"]), int(r["d"]), r["construction"]) for r in rows}
    for n, d in [(3, 2), (3, 1), (7, 4), (7, 3)]:
        assert (n, d, "paley-" + ("upper" if d > n // 2 else "lower")) in got
        assert (n, d, "conference-" + ("upper" if d > n // 2 else "lower")) in got
    for n, d in [(4, 2), (6, 3), (8, 4)]:
        assert (n, d, "zauner") in got
    assert all(r["verified"] == "true" for r in rows)
    keys = [(int(r["n"]), int(r["d"]), r["construction"]) for r in rows]
    assert keys == sorted(keys)


def test_catalog_max27(tmp_path):
    out = tmp_path / "cat.csv"
    assert main(["catalog", "--max-n", "27", "--out", str(out)]) == 0
    rows = read_catalog(out)
    got = {(int(r["n"]), int(r["d"]), r["construction"]) for r in rows}
    assert (15, 8, "conference-upper") in got and (15, 7, "conference-lower") in got
    assert not any(n == 15 and c.startswith("paley") for n, _, c in got)
    assert (27, 14, "paley-upper") in got
    target = {(int(r["n"]), int(r["d"])): float(r["target_overlap_sq"]) for r in rows}
    assert target[(7, 4)] == 0.125


def test_catalog_errors(tmp_path):
    assert main(["catalog", "--max-n", "7", "--out", str(tmp_path / "no" / "x.csv")]) == 2
    assert main(["catalog", "--max-n", "100000", "--out", str(tmp_path / "x.csv")]) == 2


def test_experiment(capsys):
    assert main(["experiment", "--k", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["extra"] in {"Equal", "ConjugateEqual", "Different"}
    assert main(["experiment", "--k", "1"]) == 2


def test_argparse_usage_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--construction", "nope", "--out", "x"])
    assert exc.value.code == 2
