"""Report assembly: machine-readable payloads, tables, and summary figures.

JSON is the stable machine contract; text mirrors the tabular layout of the
classification for eyeball comparison; CSV carries the certified rows.
Figures are small matplotlib summaries written next to the delimited output
when an export directory is given.
"""

import csv
import io
import json
from fractions import Fraction


def _approx(value, digits=6):
    return f"{float(value.refined(Fraction(1, 10 ** (digits + 2))).mid):.{digits}f}"


# ---------------------------------------------------------------------------
# radii

def radii_payload(report):
    candidates = []
    for cand in report.candidates:
        candidates.append({
            "word": cand.witness_word.paper_coding(),
            "context": "skew",
            "minpoly": list(cand.minpoly.serialize()),
            "root_interval": [str(cand.value.lo), str(cand.value.hi)],
            "status": cand.status,
            "certification_precision_bits": report.precision_bits,
        })
    certified = []
    for cand in report.certified:
        certified.append({
            "word": cand.witness_word.paper_coding(),
            "minpoly": list(cand.minpoly.serialize()),
            "approx": _approx(cand.value),
        })
    return {
        "kind": "radii",
        "word_count": len(report.words),
        "words": [w.paper_coding() for w in report.words],
        "prefilter_count": len(report.prefilter_values),
        "certified_count": len(report.certified),
        "reference_match": report.reference_match,
        "factor_mode": report.factor_mode,
        "candidates": candidates,
        "certified": certified,
    }


def radii_text(report):
    out = [f"skew candidate words: {len(report.words)}",
           f"pre-filter radius values: {len(report.prefilter_values)}",
           f"certified radius values: {len(report.certified)}",
           "",
           f"{'word':8s} {'minimal polynomial':34s} {'r':10s}"]
    for cand in report.certified:
        out.append(f"{cand.witness_word.paper_coding():8s} "
                   f"{str(cand.minpoly):34s} {_approx(cand.value)}")
    out.append("")
    out.append("rejected pre-filter values:")
    for cand in report.candidates:
        if cand.status in ("rejected", "degenerate"):
            out.append(f"{cand.witness_word.paper_coding():8s} "
                       f"{str(cand.minpoly):34s} {_approx(cand.value)}  "
                       f"[{cand.status}]")
    out.append("")
    out.append(f"reference match: {report.reference_match}")
    return "\n".join(out) + "\n"


def radii_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "minpoly", "root_lo", "root_hi", "approx"])
    for cand in report.certified:
        w.writerow([cand.witness_word.paper_coding(),
                    " ".join(str(c) for c in cand.minpoly.serialize()),
                    str(cand.value.lo), str(cand.value.hi),
                    _approx(cand.value)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# necklace searches

def necklaces_payload(context, coding, bounds, results, realized):
    return {
        "kind": "necklaces",
        "context": context,
        "radius_word": coding,
        "triple_bounds": list(bounds),
        "screened": [{"triple": list(t.astuple()), "certified": ok}
                     for (t, ok) in results],
        "certified_triples": [list(t.astuple()) for (t, ok) in results if ok],
        "realized_words": {str(t.astuple()): [w.paper_coding() for w in words]
                           for (t, words) in realized},
    }


def necklaces_text(payload):
    out = [f"context: {payload['context']}  radius word: {payload['radius_word']}",
           f"triple bounds (i, j, k): {tuple(payload['triple_bounds'])}",
           f"screened triples: {len(payload['screened'])}"]
    for row in payload["screened"]:
        mark = "certified" if row["certified"] else "rejected"
        out.append(f"  {tuple(row['triple'])}  {mark}")
    for key, words in payload["realized_words"].items():
        out.append(f"words realizing {key}: {', '.join(words) or '(none)'}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# shells

def shells_payload(embedded, ring_counts, expected_rings):
    shells = []
    for emb, rings in zip(embedded, ring_counts):
        nl, ns = emb.complex.label_counts()
        shells.append({
            "shape_class": emb.shape_class,
            "large_vertices": nl,
            "small_vertices": ns,
            "faces": len(emb.complex.faces),
            "coplanar_rings": rings,
        })
    computed = sorted(ring_counts)
    return {
        "kind": "shells",
        "count": len(embedded),
        "shells": shells,
        "ring_counts_computed": computed,
        "ring_counts_expected": sorted(expected_rings),
        "ring_counts_agree": computed == sorted(expected_rings),
    }


def shells_text(payload):
    out = [f"complete shells: {payload['count']}"]
    for s in payload["shells"]:
        out.append(f"  {s['shape_class']}: {s['large_vertices']} large + "
                   f"{s['small_vertices']} small, {s['faces']} faces, "
                   f"{s['coplanar_rings']} coplanar 6-rings")
    if not payload["ring_counts_agree"]:
        out.append(f"note: computed ring counts {payload['ring_counts_computed']} "
                   f"differ from the classical expectation "
                   f"{payload['ring_counts_expected']}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# packings

def pack_payload(seq, filled, verdict, metrics, classes, recovered, roundtrip):
    return {
        "kind": "pack",
        "sequence": str(seq),
        "filled": filled,
        "compact": bool(verdict.compact),
        "verdict_reason": verdict.reason,
        "simplex_census": verdict.simplex_census,
        "density_exact": metrics.density_expression(),
        "density_interval": [str(metrics.density_interval.lo),
                             str(metrics.density_interval.hi)],
        "density_float": metrics.density_float(),
        "counts": metrics.counts,
        "shell_classes": sorted(set(classes.values())) if classes else [],
        "recovered_sequence": str(recovered) if recovered else None,
        "roundtrip_ok": roundtrip,
    }


def pack_text(payload):
    out = [f"stacking sequence: {payload['sequence']}  filled: {payload['filled']}",
           f"compact: {payload['compact']}  ({payload['verdict_reason']})",
           f"density: {payload['density_exact']} = {payload['density_float']:.6f}",
           f"spheres per cell: {payload['counts']}",
           f"simplex census: {payload['simplex_census']}"]
    if payload["shell_classes"]:
        out.append(f"shell classes: {', '.join(payload['shell_classes'])}")
    if payload["recovered_sequence"]:
        out.append(f"recovered sequence: {payload['recovered_sequence']} "
                   f"(round trip {'ok' if payload['roundtrip_ok'] else 'FAILED'})")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# generic output

def to_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def payload_csv(payload):
    """Flat key,value fallback for payloads without a richer CSV shape."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        w.writerow([key, value])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# figures

def _matplotlib():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def save_radii_figure(report, path):
    """Number line of candidate radii: certified vs rejected."""
    plt = _matplotlib()
    fig, ax = plt.subplots(figsize=(9, 2.8))
    groups = {
        "certified": ("tab:blue", "o", 1.0),
        "rejected": ("tab:red", "x", 0.6),
        "degenerate": ("tab:orange", "s", 0.6),
    }
    seen = set()
    for cand in report.candidates:
        key = str(cand.minpoly)
        x = cand.approx()
        color, marker, y = groups.get(cand.status, ("gray", ".", 0.3))
        ax.scatter([x], [y], c=color, marker=marker, s=42, zorder=3)
        if cand.status == "certified" and key not in seen:
            seen.add(key)
            ax.annotate(cand.witness_word.paper_coding(), (x, 1.0),
                        xytext=(0, 8), textcoords="offset points",
                        ha="center", fontsize=7, rotation=45)
    ax.set_yticks([0.3, 0.6, 1.0])
    ax.set_yticklabels(["other", "rejected", "certified"], fontsize=8)
    ax.set_ylim(0.0, 1.45)
    ax.set_xlim(0, 1)
    ax.set_xlabel("radius ratio r")
    ax.set_title("candidate radius ratios and their certification status")
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})
    plt.close(fig)


def save_density_figure(entries, path):
    """Bar chart of exact packing densities."""
    plt = _matplotlib()
    fig, ax = plt.subplots(figsize=(6, 3.2))
    labels = [e[0] for e in entries]
    values = [e[1] for e in entries]
    bars = ax.bar(labels, values, color=["tab:gray" if v < 0.75 else "tab:blue"
                                         for v in values])
    for bar, v in zip(bars, values):
        ax.annotate(f"{v:.5f}", (bar.get_x() + bar.get_width() / 2, v),
                    xytext=(0, 3), textcoords="offset points",
                    ha="center", fontsize=8)
    ax.set_ylim(0, 1)
    ax.set_ylabel("density")
    ax.set_title("packing density before and after filling the holes")
    fig.tight_layout()
    fig.savefig(path, dpi=150, metadata={"Software": None})
    plt.close(fig)
