"""Aggregate per-knot reports and their JSON/text rendering.

Every numeric claim carries a ``route`` tag: "formula" (closed form),
"oracle" (independent computation), or "both-agree" (the two were
computed separately and asserted equal before the report was built).
JSON output is canonical: keys sorted, rationals as "num/den" strings,
polynomials in their text form; the timing block is excluded from JSON
so equal inputs give byte-identical output.
"""

import json
import time

from .poly import ExactError
from .curves import c_model, d_model, d_split, STATE_CURVE
from .geometry import (DegenerateModel, component_count, genus_X, genus_Y,
                       odd_point_report, smoothness_certificate)
from .knotprops import (alexander, classify, commensurability_certificate,
                        fourplat_sequence, is_fibered, normalize_knot,
                        two_bridge_params, trace_field_report)

SCHEMA = 1


def _affine_dict(v):
    return {"kind": v.kind, "points": [dict(p) for p in v.points],
            "trace": v.trace}


def _infinity_dict(v):
    return {"transversal": v.transversal,
            "r_line": {"found": v.r_line[0], "required": v.r_line[1]},
            "t_line": {"found": v.t_line[0], "required": v.t_line[1]},
            "corner_on_curve": v.corner_on_curve,
            "witnesses": [dict(w) for w in v.witnesses]}


def _cert_dict(cert):
    if cert.refusal is not None:
        return {"refused": cert.refusal}
    out = {"smooth": cert.smooth, "route": "oracle",
           "target": cert.target.to_dict(),
           "affine": _affine_dict(cert.affine),
           "infinity": _infinity_dict(cert.infinity),
           "method": cert.method}
    if cert.d0d1 is not None:
        out["component_intersection"] = dict(cert.d0d1)
    return out


def _analysis_dict(a):
    out = {"verdict": a.verdict}
    for field in ("witness_prime", "degree", "factor_degrees", "root",
                  "degree_sums", "sampled_primes"):
        if hasattr(a, field):
            v = getattr(a, field)
            if field == "root":
                v = str(v)
            elif isinstance(v, tuple):
                v = list(v)
            out[field] = v
    return out


def build_report(k, l):
    """Full invariant pipeline for one (k,l), degenerate-safe."""
    t0 = time.perf_counter()
    nid = normalize_knot(k, l)
    rep = {
        "schema": SCHEMA,
        "knot": {"k": k, "l": l, "model_k": nid.k, "model_l": nid.l,
                 "normalized": nid.normalized, "moves": list(nid.moves)},
        "classification": classify(k, l),
    }

    models = {}
    try:
        models["C"] = c_model(k, l).to_dict()
    except ExactError as e:
        models["C"] = {"unavailable": str(e)}
    try:
        dm = d_model(k, l)
        models["D"] = dm.to_dict()
        if dm.state == STATE_CURVE and dm.k == dm.l and dm.l % 2 == 0:
            models["D_split"] = [m.to_dict() for m in d_split(dm.l)]
    except ExactError as e:
        models["D"] = {"unavailable": str(e)}
    rep["models"] = models

    try:
        tb = two_bridge_params(k, l)
        two = {"p": tb.p, "q": tb.q, "cont_frac": list(tb.cont_frac),
               "value": str(tb.value()), "route": "both-agree"}
        try:
            two["fourplat"] = list(fourplat_sequence(k, l))
        except ExactError as e:
            two["fourplat"] = {"unavailable": str(e)}
        rep["two_bridge"] = two
    except ExactError as e:
        rep["two_bridge"] = {"unavailable": str(e)}

    try:
        cert = smoothness_certificate(k, l)
        rep["smoothness"] = _cert_dict(cert)
    except ExactError as e:
        cert = None
        rep["smoothness"] = {"unavailable": str(e)}

    try:
        cc = component_count(k, l)
        rep["component_count"] = {"count": cc.count,
                                  "degenerate": cc.degenerate,
                                  "route": "both-agree"}
    except (ExactError, AssertionError) as e:
        rep["component_count"] = {"unavailable": str(e)}

    try:
        gy = genus_Y(k, l, certificate=cert if cert and cert.smooth else None)
        rep["genus_Y"] = [
            {"component": e.component, "genus": e.genus_bidegree,
             "hyperelliptic": e.hyperelliptic, "route": "both-agree"}
            for e in gy.entries]
    except (ExactError, AssertionError) as e:
        rep["genus_Y"] = {"unavailable": str(e)}

    try:
        gx = genus_X(k, l)
        rep["genus_X"] = [
            {"component": e.component, "genus": e.genus_rh,
             "odd_points": e.odd_points, "route": "both-agree"}
            for e in gx.entries]
        opr = odd_point_report(k, l)
        rep["odd_points"] = {"count": opr.count, "affine": opr.affine,
                             "infinity": opr.infinity, "case": opr.case,
                             "route": "both-agree"}
    except (ExactError, AssertionError) as e:
        rep["genus_X"] = {"unavailable": str(e)}
        rep["odd_points"] = {"unavailable": str(e)}

    try:
        rep["alexander"] = {"poly": str(alexander(k, l)),
                            "fibered": is_fibered(k, l), "route": "formula"}
    except ExactError as e:
        fib = True if k * l == 0 else None
        rep["alexander"] = {"unavailable": str(e), "fibered": fib}

    try:
        tf = trace_field_report(k, l)
        rep["trace_field"] = {"bound": tf.bound, "poly_degree": tf.poly_degree,
                              "squarefree_degree": tf.squarefree_degree,
                              "analysis": _analysis_dict(tf.analysis),
                              "empirical": tf.empirical,
                              "route": "both-agree"}
    except ExactError as e:
        rep["trace_field"] = {"unavailable": str(e)}

    try:
        cc = commensurability_certificate(k, l)
        rep["commensurability"] = {"verdict": cc.verdict,
                                   "witness": cc.witness, "route": "oracle"}
    except ExactError as e:
        rep["commensurability"] = {"unavailable": str(e)}

    rep["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    return rep


def to_json(rep):
    """Canonical JSON: sorted keys, no timing block."""
    clean = {k: v for k, v in rep.items() if k != "timing"}
    return json.dumps(clean, sort_keys=True, separators=(",", ": "),
                      indent=1) + "\n"


def _render(value, indent):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in value:
            v = value[key]
            if isinstance(v, (dict, list)):
                lines.append("%s%s:" % (pad, key))
                lines.extend(_render(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, key, v))
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.append("%s-" % pad)
                lines.extend(_render(v, indent + 1))
            else:
                lines.append("%s- %s" % (pad, v))
    else:
        lines.append("%s%s" % (pad, value))
    return lines


def render_text(rep):
    return "\n".join(_render(rep, 0)) + "\n"
