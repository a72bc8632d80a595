"""End-to-end tests for the command-line interface."""

import json

from supercrystals.cli import main

PAPER = ["--p", "3", "--parities", "1,1,0,0,0"]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_signature_single_residue(capsys):
    code, out, _ = run(PAPER + ["signature", "--weight", "1,-1,1,7,5", "--r", "0"], capsys)
    assert code == 0
    assert out == "++-++ / ++00+"


def test_signature_all_lists_only_nonzero(capsys):
    code, out, _ = run(PAPER + ["signature", "--weight", "1,-1,1,7,5"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0] == "r=0: ++-++ / ++00+"


def test_signature_json(capsys):
    code, out, _ = run(
        PAPER + ["--format", "json", "signature", "--weight", "1,-1,1,7,5"], capsys
    )
    assert code == 0
    rows = json.loads(out)
    assert {"r": 0, "raw": "++-++", "reduced": "++00+"} in rows


def test_apply_fstar(capsys):
    code, out, _ = run(
        PAPER + ["apply", "--op", "fstar", "--r", "0", "--weight", "1,-1,1,7,5"],
        capsys,
    )
    assert code == 0
    assert out == "1,-1,1,7,6"


def test_apply_undefined(capsys):
    code, out, _ = run(
        PAPER + ["apply", "--op", "estar", "--r", "0", "--weight", "1,-1,1,7,5"],
        capsys,
    )
    assert code == 0
    assert out == "undefined"


def test_classify(capsys):
    code, out, _ = run(
        PAPER + ["classify", "--weight", "1,-1,1,7,5", "--i", "1", "--r", "1"], capsys
    )
    assert code == 0
    assert out == "good (r=1)"


def test_graph_dot_format_after_subcommand(capsys):
    code, out, _ = run(
        PAPER
        + ["graph", "--weight", "1,-1,1,7,5", "--depth", "1", "--format", "dot"],
        capsys,
    )
    assert code == 0
    assert out.startswith("digraph crystal {")
    assert sum(1 for line in out.splitlines() if "->" in line) == 3
    assert sum(1 for line in out.splitlines() if "label=" in line and "->" not in line) == 4


def test_graph_json(capsys):
    code, out, _ = run(
        PAPER + ["--format", "json", "graph", "--weight", "1,-1,1,7,5"], capsys
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["nodes"]) == 4 and len(data["edges"]) == 3


def test_blocks_from_file(tmp_path, capsys):
    weights = tmp_path / "weights.json"
    weights.write_text(json.dumps([[0, 0], [1, -1], [1, 0]]))
    code, out, _ = run(
        ["--p", "2", "--parities", "0,1", "blocks", "--weights", str(weights)], capsys
    )
    assert code == 0
    blocks = json.loads(out)
    assert sum(len(b["weights"]) for b in blocks) == 3
    for b in blocks:
        assert "wt" in b


def test_pbw_lower(capsys):
    code, out, _ = run(
        PAPER + ["pbw", "lower", "--i", "1", "--j", "3", "--A", ""], capsys
    )
    assert code == 0
    assert out == "1 * F[3,1]"


def test_pbw_verma_scalar(capsys):
    code, out, _ = run(
        ["--p", "0", "--parities", "1,0", "pbw", "verma-scalar", "--weight", "2,3",
         "--r", "1"],
        capsys,
    )
    assert code == 0
    assert out.endswith("pass")


def test_pbw_check_central(capsys):
    code, out, _ = run(
        ["--p", "0", "--parities", "1,0", "pbw", "check-central", "--r", "2"], capsys
    )
    assert code == 0
    assert out == "pass"


def test_malformed_weight_exits_2(capsys):
    code, _, err = run(PAPER + ["signature", "--weight", "1,x,3,4,5"], capsys)
    assert code == 2
    assert "error:" in err


def test_composite_characteristic_exits_2(capsys):
    code, _, err = run(
        ["--p", "4", "--parities", "0,1", "signature", "--weight", "0,0"], capsys
    )
    assert code == 2
    assert "error:" in err


def test_verify_pinned_suite(capsys):
    code, out, _ = run(
        ["--p", "0", "--parities", "1,0", "verify", "pbw-identities",
         "--max-rank", "2", "--pin-parities", "--processes", "1"],
        capsys,
    )
    assert code == 0
    assert "[pass]" in out and "FAIL" not in out


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "sig.txt"
    code, out, _ = run(
        PAPER + ["signature", "--weight", "1,-1,1,7,5", "--r", "0", "--out",
                 str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    assert target.read_text().strip() == "++-++ / ++00+"
