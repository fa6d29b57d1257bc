import json
import os
from pathlib import Path

import pytest

from diffseq import cli
from diffseq.gapset import GapSet

GOLDEN = Path(__file__).parent / "golden"
UPDATE = bool(os.environ.get("DIFFSEQ_UPDATE_GOLDEN"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out) if out else None, json.loads(err) if err else None


def _scrub(doc):
    if isinstance(doc, dict):
        return {k: _scrub(v) for k, v in doc.items() if k not in ("seconds", "file", "sidecar")}
    if isinstance(doc, list):
        return [_scrub(v) for v in doc]
    return doc


def check_golden(name, doc):
    path = GOLDEN / f"{name}.json"
    doc = _scrub(doc)
    if UPDATE or not path.exists():
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    assert doc == json.loads(path.read_text())


def test_parse_examples():
    a = cli.parse_command(["delta", "--gapset", "pow2", "--k", "3"])
    assert a.verb == "delta" and a.gapset == GapSet.powers_of_two() and a.k == 3 and a.r == 2
    a = cli.parse_command(["color", "--family", "pt", "--t", "3", "--n", "16"])
    assert (a.family, a.t, a.n) == ("pt", 3, 16)
    a = cli.parse_command(["bound", "--k", "32", "--optimize", "--certify"])
    assert a.optimize and a.certify and a.k == 32
    assert cli.parse_command(["verify", "--coloring", "x", "--gapset", "factorial", "--k", "4",
                              "--n", "1e6"]).n == 10**6


def test_unknown_flag(capsys):
    code, out, err = run(capsys, "delta", "--gapset", "pow2", "--k", "3", "--bogus")
    assert code == 1 and out is None and err["error"]["kind"] == "usage"


def test_bad_gapset(capsys):
    code, _, err = run(capsys, "delta", "--gapset", "primes", "--k", "3")
    assert code == 1 and "error" in err


def test_delta(capsys):
    code, doc, _ = run(capsys, "delta", "--gapset", "pow2", "--k", "2")
    assert code == 0 and doc["delta"] == 3
    check_golden("delta", doc)


def test_delta_inconclusive(capsys):
    code, doc, _ = run(capsys, "delta", "--gapset", "pow2", "--k", "5", "--budget", "3")
    assert code == 2 and doc["status"] == "inconclusive"


def test_delta_exceeds_cap(capsys):
    code, doc, _ = run(capsys, "delta", "--gapset", "explicit:1", "--k", "3", "--cap", "20")
    assert code == 0 and doc["status"] == "exceeds-cap" and doc["cap"] == 20


def test_color_pt(capsys):
    code, doc, _ = run(capsys, "color", "--family", "pt", "--t", "2", "--n", "8")
    assert code == 0 and doc["bits"] == "10011001"
    check_golden("color_pt", doc)


def test_color_dividing(capsys, tmp_path):
    out = tmp_path / "div.txt"
    code, doc, _ = run(capsys, "color", "--family", "dividing", "--a", "1,2,3|4", "--n", "500",
                       "--out", str(out))
    assert code == 0
    assert json.loads(Path(doc["sidecar"]).read_text()) == doc["construction"]
    check_golden("color_dividing", doc)
    code, ver, _ = run(capsys, "verify", "--coloring", str(out), "--gapset", "dividing:1,2,3|4",
                       "--k", str(doc["construction"]["avoidedLength"]))
    assert code == 0 and ver["status"] == "certificate"


def test_color_usage_errors(capsys):
    assert run(capsys, "color", "--family", "pt", "--n", "8")[0] == 1
    assert run(capsys, "color", "--family", "rational", "--n", "8")[0] == 1
    assert run(capsys, "color", "--family", "dividing", "--n", "8")[0] == 1


def test_color_rational(capsys):
    code, doc, _ = run(capsys, "color", "--family", "rational", "--alpha", "1/2", "--n", "8")
    assert code == 0 and doc["bits"] == "01100110"


def test_round_trip(capsys, tmp_path):
    f = tmp_path / "fact.txt"
    code, doc, _ = run(capsys, "color", "--family", "factorial", "--n", "5000", "--out", str(f))
    assert code == 0 and doc["file"] == str(f)
    code, ver, _ = run(capsys, "verify", "--coloring", str(f), "--gapset", "factorial",
                       "--k", "4")
    assert code == 0 and ver["status"] == "certificate" and ver["impliedBound"] == 5001
    code, lg, _ = run(capsys, "longest", "--coloring", str(f), "--gapset", "factorial")
    assert lg["length"] == ver["longestFound"]
    check_golden("verify", ver)
    check_golden("longest", lg)


def test_verify_counterexample(capsys, tmp_path):
    f = tmp_path / "p2.txt"
    run(capsys, "color", "--family", "pt", "--t", "2", "--n", "8", "--out", str(f))
    code, doc, _ = run(capsys, "verify", "--coloring", str(f), "--gapset", "pow2", "--k", "3",
                       "--n", "40")
    assert code == 3 and doc["status"] == "counterexample"
    assert len(doc["witness"]["positions"]) == 3


def test_verify_needs_n_for_periodic(capsys, tmp_path):
    f = tmp_path / "p2.txt"
    run(capsys, "color", "--family", "pt", "--t", "2", "--n", "8", "--out", str(f))
    assert run(capsys, "verify", "--coloring", str(f), "--gapset", "pow2", "--k", "3")[0] == 1
    assert run(capsys, "verify", "--coloring", str(tmp_path / "missing"), "--gapset", "pow2",
               "--k", "3", "--n", "4")[0] == 1


def test_longest_gap_size(capsys, tmp_path):
    f = tmp_path / "p4.txt"
    run(capsys, "color", "--family", "pt", "--t", "4", "--n", "16", "--out", str(f))
    code, doc, _ = run(capsys, "longest", "--coloring", str(f), "--gapset", "pow2", "--n", "64",
                       "--gap-size", "8")
    assert code == 0 and doc["maxGapCount"] == 0


def test_bound(capsys):
    code, doc, _ = run(capsys, "bound", "--k", "32", "--optimize", "--certify")
    assert code == 0 and doc["consistent"] and doc["refinedBound"] >= 2052
    check_golden("bound", doc)
    code, doc, _ = run(capsys, "bound", "--k", "32", "--t", "8", "--u", "1")
    assert doc["refinedBound"] == 2052 and doc["certifiedBound"] == "not run"
    assert run(capsys, "bound", "--k", "32", "--optimize", "--t", "8")[0] == 1


def test_certify(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code, doc, _ = run(capsys, "certify", "--k", "8", "--t", "4", "--out", str(out))
    assert code == 0 and doc["impliedBound"] == 34
    assert json.loads(out.read_text()) == doc
    check_golden("certify", doc)


def test_alpha(capsys):
    code, doc, _ = run(capsys, "alpha", "--precision", "3", "--floor-parity", "10",
                       "--scaled", "24")
    assert code == 0 and doc["floorParity"]["parity"] == 0
    check_golden("alpha", doc)


def test_intervals(capsys):
    code, doc, _ = run(capsys, "intervals", "--a", "1,2,3,4,5,6", "--n", "100")
    assert code == 0 and doc["nested"]["T"] == 5
    assert doc["J"]["empty"] is True
    check_golden("intervals", doc)


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "diffseq", "delta", "--gapset", "pow2",
                           "--k", "3"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["delta"] == 7
