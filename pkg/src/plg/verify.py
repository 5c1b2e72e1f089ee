"""End-to-end re-verification of embedding outputs against their reports.

Every check recomputes from first principles: histogram against the
distribution definition, clique covers against the assembled edges, witness
independence, and the closed-form bounds from the recorded parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .embed_beta1 import Beta1Params, alon_interval, layered_is_bound
from .embed_sub1 import Sub1Params, residual_is_bound_sub1
from .graph import MultiGraph, is_independent
from .model import PowerLawParams, degree_counts
from .report import SCHEMA, EmbeddingReport

_REL_TOL = 1e-9


@dataclass
class VerifyResult:
    ok: bool
    checks: list[dict]

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, "ok": self.ok, "checks": self.checks}


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= _REL_TOL * max(1.0, abs(a), abs(b))


def _check_conformance(plg: MultiGraph, rep: dict) -> dict:
    params = rep["params"]
    beta = params.get("beta", 1.0)
    p = PowerLawParams(params["alpha"], beta)
    counts = degree_counts(p)
    deficits = [tuple(t) for t in rep["parity_deficits"]]
    if len(deficits) > 2:
        return {"check": "conformance", "ok": False, "detail": "more than 2 deficits declared"}
    expected = {i + 1: int(c) for i, c in enumerate(counts)}
    for _v, t in deficits:
        expected[t] = expected.get(t, 0) - 1
        expected[t - 1] = expected.get(t - 1, 0) + 1
    actual: dict[int, int] = {}
    for dv in plg.degrees():
        actual[int(dv)] = actual.get(int(dv), 0) + 1
    bad = {
        i: (expected.get(i, 0), actual.get(i, 0))
        for i in set(expected) | set(actual)
        if expected.get(i, 0) != actual.get(i, 0)
    }
    if bad:
        worst = sorted(bad)[0]
        return {
            "check": "conformance",
            "ok": False,
            "detail": f"degree bucket {worst}: expected {bad[worst][0]}, found {bad[worst][1]}",
        }
    return {"check": "conformance", "ok": True, "detail": ""}


def _check_parts(plg: MultiGraph, rep: dict) -> dict:
    spans = sorted(part["range"] for part in rep["parts"].values())
    pos = 0
    for lo, hi in spans:
        if lo != pos:
            return {"check": "parts", "ok": False, "detail": f"gap or overlap at vertex {pos}"}
        pos = hi
    if pos != plg.vertex_count:
        return {
            "check": "parts",
            "ok": False,
            "detail": f"parts cover {pos} vertices, graph has {plg.vertex_count}",
        }
    return {"check": "parts", "ok": True, "detail": ""}


def _check_certificates(plg: MultiGraph, rep: dict) -> dict:
    for name, cert in rep["certificates"].items():
        lo, hi = rep["parts"][name]["range"]
        covered = 0
        pos = lo
        for start, stop in cert["cliques"]:
            if start != pos or stop > hi:
                return {
                    "check": "certificates",
                    "ok": False,
                    "detail": f"{name}: clique [{start},{stop}) misaligned with part [{lo},{hi})",
                }
            for u in range(start, stop):
                for v in range(u + 1, stop):
                    if plg.multiplicity(u, v) < 1:
                        return {
                            "check": "certificates",
                            "ok": False,
                            "detail": f"{name}: missing clique edge ({u},{v})",
                        }
            covered += stop - start
            pos = stop
        if covered != hi - lo:
            return {
                "check": "certificates",
                "ok": False,
                "detail": f"{name}: cliques cover {covered} of {hi - lo} vertices",
            }
        if len(cert["cliques"]) != cert["is_upper_bound"]:
            return {
                "check": "certificates",
                "ok": False,
                "detail": f"{name}: is_upper_bound does not equal the clique count",
            }
    return {"check": "certificates", "ok": True, "detail": ""}


def _check_witness(plg: MultiGraph, rep: dict, original: MultiGraph) -> dict:
    witness = rep["witness"]
    if not is_independent(plg, witness):
        return {"check": "witness", "ok": False, "detail": "witness not independent in output"}
    source = rep["extras"].get("witness_source_vertices")
    if source is not None and not is_independent(original, source):
        return {"check": "witness", "ok": False, "detail": "witness source not independent in input"}
    if rep["kind"] == "sub1" and source is not None:
        if sorted(2 * i for i in source) != sorted(witness):
            return {"check": "witness", "ok": False, "detail": "witness does not match its source"}
    return {"check": "witness", "ok": True, "detail": ""}


def _check_bounds(rep: dict) -> dict:
    params = rep["params"]
    bounds = rep["bounds"]
    if rep["kind"] == "sub1":
        sp = Sub1Params(
            n=params["n_embedded"],
            beta=params["beta"],
            x=params["x"],
            alpha=params["alpha"],
            delta=params["delta"],
            a_x=params["a_x"],
            y_split=params["y_split"],
            g3_cut=params["g3_cut"],
            bumps=params["bumps"],
        )
        rb = residual_is_bound_sub1(sp)
        expect = {
            "g1_bound": rb.g1_bound,
            "g3_bound": rb.g3_bound,
            "i_y1": rb.i_y1,
            "i_y2": rb.i_y2,
        }
    else:
        bp = Beta1Params(
            n_d=params["n_d"],
            alpha=params["alpha"],
            x=params["x"],
            delta=params["delta"],
            a_x=params["a_x"],
            h=params["h"],
            L=params["L"],
            bumps=params["bumps"],
        )
        layered = layered_is_bound(bp)
        ex = rep["extras"]
        lo, hi = alon_interval(
            ex["is_g"], ex["n_base"], ex["d"], ex["lambda_1"], ex["lambda_min"], ex["k"]
        )
        expect = {
            "layered_exact": float(layered.exact),
            "layered_asymptotic": layered.asymptotic,
            "layered_naive": float(layered.naive),
            "alon_lo": lo,
            "alon_hi": hi,
        }
    for key, val in expect.items():
        if key not in bounds or not _close(bounds[key], val):
            return {
                "check": "bounds",
                "ok": False,
                "detail": f"{key}: report {bounds.get(key)}, recomputed {val}",
            }
    return {"check": "bounds", "ok": True, "detail": ""}


def verify_embedding(
    plg: MultiGraph, report: EmbeddingReport | dict, original: MultiGraph
) -> VerifyResult:
    """Re-check an embedding run: conformance, certificates, witness, bounds."""
    rep = report.to_dict() if isinstance(report, EmbeddingReport) else report
    if rep.get("schema") != SCHEMA:
        return VerifyResult(False, [{"check": "schema", "ok": False, "detail": "unknown schema"}])
    checks = [
        _check_conformance(plg, rep),
        _check_parts(plg, rep),
        _check_certificates(plg, rep),
        _check_witness(plg, rep, original),
        _check_bounds(rep),
    ]
    return VerifyResult(all(c["ok"] for c in checks), checks)
