import json
import random

import pytest

from sspforge import serialize
from sspforge.cli import main
from sspforge.core import DistanceMeasure, mask_of
from sspforge.gen import random_source_for_edge
from sspforge.problems import CnfInstance, ProblemKind, VertexCoverInstance
from sspforge.reductions import ALL_EDGES, build_blowup, build_preserving
from sspforge.rr import CombRrInstance

HAM = DistanceMeasure.HAMMING
PHI = CnfInstance(3, ((3, 4, 2),))


@pytest.mark.parametrize("edge", ALL_EDGES)
def test_artifact_roundtrip(edge):
    rng = random.Random(repr((edge, "rt")))
    src = random_source_for_edge(edge, rng)
    if edge in ("sat-3sat", "3sat-vc", "3sat-is", "3sat-subsetsum",
                "3sat-dhampath", "3sat-2ddp", "3sat-steinertree"):
        art = build_blowup(edge, src, 0, HAM)
    else:
        params = {"k": 3} if edge == "2ddp-kddp" else None
        art = build_preserving(edge, src, params)
    doc = serialize.artifact_to_doc(art)
    again = serialize.artifact_from_doc(json.loads(serialize.dumps(doc)))
    assert again == art
    assert serialize.dumps(serialize.artifact_to_doc(again)) == serialize.dumps(doc)


def test_instance_roundtrip_all_kinds():
    rng = random.Random(2024)
    for edge in ALL_EDGES:
        src = random_source_for_edge(edge, rng)
        for kind in ProblemKind:
            try:
                doc = serialize.instance_to_doc(kind, src)
            except Exception:
                continue
            k2, inst2 = serialize.instance_from_doc(doc)
            if type(inst2) is type(src):
                assert inst2 == src
                break


def test_dimacs_roundtrip():
    text = "c comment\np cnf 3 2\n1 -2 3 0\n-1 2 2 0\n"
    cnf = serialize.parse_dimacs(text)
    assert cnf.n_vars == 3
    assert cnf.clauses == ((0, 4, 2), (3, 1, 1))
    again = serialize.parse_dimacs(serialize.emit_dimacs(cnf))
    assert again == cnf


def test_dimacs_matches_json_import(tmp_path):
    cnf = PHI
    doc = serialize.instance_to_doc(ProblemKind.THREE_SAT, cnf)
    from_json = serialize.instance_from_doc(json.loads(serialize.dumps(doc)))[1]
    from_dimacs = serialize.parse_dimacs(serialize.emit_dimacs(cnf))
    assert from_json == from_dimacs


def test_comb_rr_doc_roundtrip():
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER,
        VertexCoverInstance(3, ((0, 1), (1, 2)), 2),
        mask_of([1]),
        1,
        2,
        HAM,
    )
    doc = json.loads(serialize.dumps(serialize.comb_rr_to_doc(comb)))
    assert serialize.comb_rr_from_doc(doc) == comb


def _write_cnf(tmp_path, cnf, name="f.cnf"):
    p = tmp_path / name
    p.write_text(serialize.emit_dimacs(cnf))
    return str(p)


def test_cli_reduce_and_check(tmp_path):
    src = _write_cnf(tmp_path, PHI)
    art = tmp_path / "artifact.json"
    rc = main([
        "reduce", src, "--edge", "3sat-vc", "--lb", "x3",
        "--artifact", str(art),
    ])
    assert rc == 0
    rc = main(["check", str(art), "--what", "all"])
    assert rc == 0


def test_cli_reduce_chain(tmp_path):
    src = _write_cnf(tmp_path, PHI)
    art = tmp_path / "artifact.json"
    rc = main([
        "reduce", src, "--chain", "3sat-vc,vc-ds", "--artifact", str(art),
    ])
    assert rc == 0
    doc = json.loads(art.read_text())
    assert doc["kind"] == "blowup"
    assert doc["target"]["kind"] == "ds"


def test_cli_reduce_rejects_wide_clause(tmp_path):
    wide = CnfInstance(4, ((0, 1, 2, 3),))
    src = _write_cnf(tmp_path, wide)
    rc = main(["reduce", src, "--edge", "3sat-vc"])
    assert rc == 2


def test_cli_reduce_rejects_bad_chain(tmp_path):
    src = _write_cnf(tmp_path, PHI)
    rc = main(["reduce", src, "--chain", "vc-ds,3sat-vc"])
    assert rc == 3


def test_cli_check_detects_tampering(tmp_path):
    art = build_blowup("3sat-vc", PHI, 0, HAM)
    doc = serialize.artifact_to_doc(art)
    doc["target"]["payload"]["k"] = 4
    p = tmp_path / "bad.json"
    p.write_text(serialize.dumps(doc))
    assert main(["check", str(p)]) == 1


def test_cli_check_capacity_exit(tmp_path):
    art = build_blowup("3sat-vc", PHI, 0, HAM)
    p = tmp_path / "a.json"
    p.write_text(serialize.dumps(serialize.artifact_to_doc(art)))
    assert main(["check", str(p), "--max-solutions", "1"]) == 4


def test_cli_solve_comb_rr(tmp_path, capsys):
    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER,
        VertexCoverInstance(3, ((0, 1), (0, 2), (1, 2)), 2),
        0,
        0,
        0,
        HAM,
    )
    p = tmp_path / "comb.json"
    p.write_text(serialize.dumps(serialize.comb_rr_to_doc(comb)))
    assert main(["solve", str(p), "--problem", "comb-rr"]) == 0
    assert "answer: yes" in capsys.readouterr().out


def test_cli_fuzz_deterministic(tmp_path, capsys):
    args = ["fuzz", "--edges", "3sat-is,subsetsum-partition", "--count", "4",
            "--seed", "9", "--report", str(tmp_path / "r.json")]
    assert main(args) == 0
    first = (tmp_path / "r.json").read_text()
    assert main(args) == 0
    assert (tmp_path / "r.json").read_text() == first


def test_cli_fuzz_injected_beta_fails(tmp_path):
    rc = main([
        "fuzz", "--edges", "3sat-vc", "--count", "3", "--seed", "1",
        "--inject-beta", "0", "--replay", str(tmp_path / "cx.json"),
    ])
    assert rc == 1
    assert (tmp_path / "cx.json").exists()


def test_cli_fuzz_zero_count(tmp_path):
    assert main(["fuzz", "--edges", "3sat-vc", "--count", "0"]) == 0


def test_cli_report(tmp_path, capsys):
    p = tmp_path / "r.json"
    p.write_text(json.dumps({"command": "fuzz", "cases_run": 3, "failures": []}))
    assert main(["report", str(p)]) == 0
    out = capsys.readouterr().out
    assert "fuzz" in out and "cases_run" in out


def test_cli_solve_nominal_and_games(tmp_path, capsys):
    cnf = CnfInstance(3, ((0, 1, 2),))
    p = tmp_path / "f.cnf"
    p.write_text(serialize.emit_dimacs(cnf))
    assert main(["solve", str(p), "--problem", "nominal"]) == 0
    assert "answer: yes" in capsys.readouterr().out

    from sspforge.rr import RAdjSatInstance

    game = RAdjSatInstance(cnf, (0,), (1,), (2,), 1)
    g = tmp_path / "game.json"
    g.write_text(serialize.dumps(serialize.radjsat_to_doc(game)))
    assert main(["solve", str(g), "--problem", "radjsat"]) == 0
    assert "answer: yes" in capsys.readouterr().out

    eae = {"cnf": serialize.instance_payload(ProblemKind.THREE_SAT, cnf),
           "x": [0], "y": [1], "z": [2]}
    e = tmp_path / "eae.json"
    e.write_text(serialize.dumps(eae))
    assert main(["solve", str(e), "--problem", "eae-sat"]) == 0

    from sspforge.rr import CombRrInstance, comb_to_cost_rr

    comb = CombRrInstance(
        ProblemKind.VERTEX_COVER,
        VertexCoverInstance(3, ((0, 1), (0, 2), (1, 2)), 2),
        mask_of([0]), 1, 2, DistanceMeasure.HAMMING,
    )
    c = tmp_path / "cost.json"
    c.write_text(serialize.dumps(serialize.cost_rr_to_doc(comb_to_cost_rr(comb))))
    assert main(["solve", str(c), "--problem", "cost-rr"]) == 0
    assert "answer: yes" in capsys.readouterr().out


def test_env_bounds(monkeypatch):
    from sspforge.core import Bounds

    monkeypatch.setenv("SSPFORGE_MAX_UNIVERSE", "10")
    monkeypatch.setenv("SSPFORGE_MAX_SOLUTIONS", "99")
    b = Bounds.from_env()
    assert b.max_universe == 10 and b.max_solutions == 99


def test_cli_reduce_unknown_file(tmp_path):
    assert main(["reduce", str(tmp_path / "missing.cnf"), "--edge", "3sat-vc"]) == 2
