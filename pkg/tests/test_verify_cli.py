import copy
import hashlib
import json

from plg import MultiGraph, embed_sub1, read_graph, verify_embedding, write_graph
from plg.cli import main


def failing(checks):
    return [c["check"] for c in checks if not c["ok"]]


def test_verify_untampered(c5):
    g, rep = embed_sub1(c5, 0.5)
    res = verify_embedding(g, rep, c5)
    assert res.ok
    assert failing(res.checks) == []


def test_verify_detects_deleted_edge(c5):
    g, rep = embed_sub1(c5, 0.5)
    edges = g.edge_dict()
    key = max(edges)  # drop an edge inside the last fill clique
    del edges[key]
    mutated = MultiGraph(g.vertex_count, edges, g.labels)
    res = verify_embedding(mutated, rep, c5)
    assert not res.ok
    bad = failing(res.checks)
    assert "conformance" in bad
    detail = next(c["detail"] for c in res.checks if c["check"] == "conformance")
    assert "degree bucket" in detail


def test_verify_detects_bad_witness(c5):
    g, rep = embed_sub1(c5, 0.5)
    doc = rep.to_dict()
    doc["witness"] = [0, 2]  # adjacent pair copies of adjacent C5 vertices
    res = verify_embedding(g, doc, c5)
    assert not res.ok
    assert "witness" in failing(res.checks)


def test_verify_detects_tampered_bound(c5):
    g, rep = embed_sub1(c5, 0.5)
    doc = rep.to_dict()
    doc["bounds"]["g3_bound"] += 0.5
    res = verify_embedding(g, doc, c5)
    assert not res.ok
    assert "bounds" in failing(res.checks)


def test_verify_detects_broken_certificate(c5):
    g, rep = embed_sub1(c5, 0.5)
    doc = copy.deepcopy(rep.to_dict())
    doc["certificates"]["G2"]["cliques"][0][1] += 1  # clique overlaps its neighbour
    res = verify_embedding(g, doc, c5)
    assert not res.ok
    assert "certificates" in failing(res.checks)


def test_verify_beta1(c5):
    from plg import embed_beta1

    g, rep = embed_beta1(c5, d=4, seed=3, k_override=2)
    assert verify_embedding(g, rep, c5).ok
    doc = rep.to_dict()
    doc["bounds"]["alon_hi"] *= 2
    assert not verify_embedding(g, doc, c5).ok


# -- CLI ------------------------------------------------------------------------


def write_c5(path):
    g = MultiGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    path.write_text(write_graph(g))


def test_cli_dist(capsys):
    assert main(["dist", "--alpha", "2", "--beta", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["delta"] == 7
    assert rec["n_exact"] == 16
    assert rec["counts"] == [7, 3, 2, 1, 1, 1, 1]
    assert rec["schema"] == "plg-report/1"


def test_cli_dist_interval(capsys):
    assert main(["dist", "--alpha", "3", "--beta", "1", "--interval", "0.2", "1.0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["bounds"]["size"]["exact"] == 25
    assert "volume" in rec["bounds"]


def test_cli_solve_c5(tmp_path, capsys):
    write_c5(tmp_path / "c5.plg")
    assert main(["solve", "--in", str(tmp_path / "c5.plg")]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["size"] == 2
    assert rec["optimal"] is True


def test_cli_realize_roundtrip(tmp_path, capsys):
    out = tmp_path / "r.plg"
    assert main(
        ["realize", "--alpha", "2", "--beta", "1", "--from", "1", "--to", "7",
         "--out", str(out)]
    ) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["is_upper_bound"] == len(cert["clique_sizes"])
    g = read_graph(out.read_text())
    assert g.vertex_count == 16
    assert write_graph(read_graph(write_graph(g))) == write_graph(g)


def test_cli_embed_verify_pipeline(tmp_path, capsys):
    write_c5(tmp_path / "c5.plg")
    code = main(
        ["embed-sub1", "--beta", "0.5", "--in", str(tmp_path / "c5.plg"),
         "--out", str(tmp_path / "e.plg"), "--report", str(tmp_path / "e.json")]
    )
    assert code == 0
    code = main(
        ["verify", "--plg", str(tmp_path / "e.plg"),
         "--report", str(tmp_path / "e.json"), "--in", str(tmp_path / "c5.plg")]
    )
    assert code == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["ok"] is True


def test_cli_verify_fails_on_tampered_graph(tmp_path, capsys):
    write_c5(tmp_path / "c5.plg")
    main(
        ["embed-sub1", "--beta", "0.5", "--in", str(tmp_path / "c5.plg"),
         "--out", str(tmp_path / "e.plg"), "--report", str(tmp_path / "e.json")]
    )
    g = read_graph((tmp_path / "e.plg").read_text())
    edges = g.edge_dict()
    del edges[max(edges)]
    (tmp_path / "bad.plg").write_text(write_graph(MultiGraph(g.vertex_count, edges, g.labels)))
    code = main(
        ["verify", "--plg", str(tmp_path / "bad.plg"),
         "--report", str(tmp_path / "e.json"), "--in", str(tmp_path / "c5.plg")]
    )
    assert code == 1


def test_cli_expander_and_walkprod(tmp_path, capsys):
    assert main(["expander", "--n", "20", "--d", "4", "--seed", "7"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n"] == 20 and rec["d"] == 4
    assert 0 <= rec["lambda"] <= 1
    write_c5(tmp_path / "c5.plg")
    assert main(
        ["walkprod", "--in", str(tmp_path / "c5.plg"), "--d", "4", "--k", "2",
         "--seed", "1", "--out", str(tmp_path / "w.plg")]
    ) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n_d"] == 20
    assert rec["self_loops"] == 10
    g = read_graph((tmp_path / "w.plg").read_text())
    assert g.vertex_count == 20


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["nosuchcommand"]) == 2
    assert main(["solve", "--in", str(tmp_path / "missing.plg")]) == 2
    assert main(["dist", "--alpha", "-1", "--beta", "1"]) == 2
    # bracket calculators are only stated for beta <= 1
    assert main(["dist", "--alpha", "2", "--beta", "1.5", "--interval", "0.2", "0.8"]) == 2
    capsys.readouterr()


def test_cli_determinism(tmp_path, capsys):
    write_c5(tmp_path / "c5.plg")

    def run(tag):
        paths = {}
        for name in ("e.plg", "e.json", "b.plg", "b.json", "r.plg", "h.plg"):
            paths[name] = tmp_path / f"{tag}-{name}"
        main(["embed-sub1", "--beta", "0.5", "--in", str(tmp_path / "c5.plg"),
              "--out", str(paths["e.plg"]), "--report", str(paths["e.json"])])
        main(["embed-beta1", "--in", str(tmp_path / "c5.plg"), "--d", "4",
              "--seed", "3", "--out", str(paths["b.plg"]), "--report", str(paths["b.json"])])
        main(["realize", "--alpha", "3", "--beta", "1", "--from", "1", "--to", "20",
              "--out", str(paths["r.plg"])])
        main(["expander", "--n", "20", "--d", "4", "--seed", "7",
              "--out", str(paths["h.plg"])])
        return {
            name: hashlib.sha256(p.read_bytes()).hexdigest() for name, p in paths.items()
        }

    first = run("a")
    second = run("b")
    capsys.readouterr()
    assert first == second
