"""Command-line interface.

One subcommand per pipeline stage, plus `all` for the full certification
chain.  Exit codes: 0 success, 1 reproduction failure, 2 usage error,
3 precision or search budget exhausted.
"""

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import necklace, packing, report, shell
from .errors import BudgetExceeded, PrecisionExhausted
from .exactalg.algebraic import isolate_real_roots
from .exactalg.poly import RationalPoly

EXIT_OK = 0
EXIT_REPRODUCTION = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

# ring counts of the two shells as classically stated (cuboctahedron first);
# the tool recomputes them and reports any disagreement instead of failing
CLASSICAL_RING_COUNTS = (2, 1)


@dataclass
class RunConfig:
    precision_bits: int = 64
    output_format: str = "text"
    node_budget: int = 200000
    output_path: Path = None

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision-bits must be at least 64")
        if self.node_budget <= 0:
            raise ValueError("node-budget must be positive")

    @property
    def max_prec(self):
        return max(4096, self.precision_bits)


def _emit(cfg, payload, text_fn, csv_fn=None, name="report"):
    if cfg.output_format == "json":
        body = report.to_json(payload)
    elif cfg.output_format == "csv":
        body = (csv_fn or report.payload_csv)(payload)
    else:
        body = text_fn(payload)
    sys.stdout.write(body)
    if cfg.output_path:
        cfg.output_path.mkdir(parents=True, exist_ok=True)
        ext = {"json": "json", "csv": "csv", "text": "txt"}[cfg.output_format]
        (cfg.output_path / f"{name}.{ext}").write_text(body)


# ---------------------------------------------------------------------------
# subcommands

def cmd_radii(cfg):
    rep = necklace.run_skew_pipeline(max_prec=cfg.max_prec)
    payload = report.radii_payload(rep)
    _emit(cfg, payload, lambda _: report.radii_text(rep),
          csv_fn=lambda _: report.radii_csv(rep), name="radii")
    if cfg.output_path:
        report.save_radii_figure(rep, cfg.output_path / "radii.png")
    ok = (len(rep.words) == 18 and len(rep.prefilter_values) == 16
          and rep.reference_match)
    return EXIT_OK if ok else EXIT_REPRODUCTION


def _resolve_radius(args, cfg):
    if getattr(args, "minpoly", None):
        coeffs = [int(c) for c in args.minpoly.split(",")]
        roots = isolate_real_roots(RationalPoly.from_int_list(coeffs),
                                   (Fraction(0), Fraction(1)))
        if len(roots) != 1:
            raise ValueError("the polynomial must have exactly one root in (0,1)")
        return roots[0], f"minpoly{coeffs}"
    if not args.r_word:
        raise ValueError("give --r-word or --minpoly")
    return necklace.certified_radius_by_word(args.r_word, cfg.max_prec), args.r_word


# certified searches have nonempty results only at these radii
_EXPECTED_TRIPLES = {
    ("large", "1111"): [(2, 4, 0)],
    ("small", "11rr"): [(1, 2, 1)],
}


def cmd_necklaces(cfg, args):
    ctx = necklace.AngleContext.LARGE if args.context == "large" \
        else necklace.AngleContext.SMALL
    try:
        r, coding = _resolve_radius(args, cfg)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bounds = necklace.triple_bounds(ctx, r)
    results = necklace.search_triples(ctx, r, max_prec=cfg.max_prec)
    realized = [(t, necklace.realize_words(t)) for (t, ok) in results if ok]
    payload = report.necklaces_payload(args.context, coding, bounds, results, realized)
    _emit(cfg, payload, report.necklaces_text, name=f"necklaces_{args.context}")
    if (args.context, coding) in _EXPECTED_TRIPLES or not args.minpoly:
        expected = _EXPECTED_TRIPLES.get((args.context, coding), [])
        got = [tuple(t) for t in payload["certified_triples"]]
        if got != expected:
            return EXIT_REPRODUCTION
    return EXIT_OK


def _shell_chain(cfg):
    """Allowed link words from the certified searches, then the shell search."""
    r_large = necklace.certified_radius_by_word("1111", cfg.max_prec)
    r_small = necklace.certified_radius_by_word("11rr", cfg.max_prec)
    large_words = set()
    for (t, ok) in necklace.search_triples(necklace.AngleContext.LARGE, r_large,
                                           max_prec=cfg.max_prec):
        if ok:
            large_words.update(necklace.realize_words(t))
    # at sqrt2-1 the only skew word is 1111 and there is no small necklace
    skew_words = {necklace.NecklaceWord.from_string("1111")}
    shells = shell.complete_shells(large_words, skew_words,
                                   kissing_bound=12, node_budget=cfg.node_budget)
    embedded = [shell.embed_shell(s, r_large) for s in shells]
    return r_large, shells, embedded


def cmd_shells(cfg):
    try:
        _, shells, embedded = _shell_chain(cfg)
    except BudgetExceeded:
        raise
    ring_counts = [len(shell.shell_ring_property(e)) for e in embedded]
    payload = report.shells_payload(embedded, ring_counts, CLASSICAL_RING_COUNTS)
    _emit(cfg, payload, report.shells_text, name="shells")
    if cfg.output_path:
        for k, emb in enumerate(embedded):
            stem = cfg.output_path / f"shell_{k}_{emb.shape_class}"
            stem.with_suffix(".off").write_text(shell.shell_to_off(emb))
            stem.with_suffix(".json").write_text(shell.shell_to_json(emb))
    ok = (len(embedded) == 2
          and all(e.complex.label_counts() == (12, 6) for e in embedded)
          and sorted(e.shape_class for e in embedded)
          == [shell.CUBOCTAHEDRON, shell.ORTHOBICUPOLA])
    return EXIT_OK if ok else EXIT_REPRODUCTION


# filled packings must hit this density: pi * (5/3 - sqrt2)
_FILLED_DENSITY_FACTOR = None


def _filled_density_factor():
    global _FILLED_DENSITY_FACTOR
    if _FILLED_DENSITY_FACTOR is None:
        from .exactalg.quadfield import QF
        _FILLED_DENSITY_FACTOR = QF(Fraction(5, 3), -1)
    return _FILLED_DENSITY_FACTOR


def cmd_pack(cfg, args):
    try:
        seq = packing.StackingSequence(args.seq)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    model = packing.build_close_packing(seq)
    if args.fill:
        model = packing.fill_octahedral_holes(model)
    verdict = packing.verify_compact(model)
    metrics = packing.density(model, census=verdict.simplex_census)
    classes = packing.classify_shells(model) if args.fill and verdict.compact else {}
    recovered = roundtrip = None
    if args.fill and verdict.compact:
        recovered = packing.recover_stacking(model)
        roundtrip = seq.equivalent(recovered)
    payload = report.pack_payload(seq, args.fill, verdict, metrics, classes,
                                  recovered, roundtrip)
    stem = f"{seq}_filled" if args.fill else f"{seq}"
    _emit(cfg, payload, report.pack_text, name=f"pack_{stem}")
    if cfg.output_path:
        (cfg.output_path / f"packing_{stem}.xyz").write_text(
            packing.packing_to_xyz(model))
        (cfg.output_path / f"tiling_{stem}.off").write_text(
            packing.tiling_to_off(model))
        unfilled = packing.density(packing.build_close_packing(seq))
        report.save_density_figure(
            [("close-packing", unfilled.density_float()),
             (f"filled {seq}" if args.fill else str(seq), metrics.density_float())],
            cfg.output_path / "density.png")
    if args.fill:
        ok = (verdict.compact and roundtrip
              and metrics.density_factor == _filled_density_factor())
    else:
        ok = not verdict.compact
    return EXIT_OK if ok else EXIT_REPRODUCTION


def cmd_all(cfg):
    """The full certification chain in one run."""
    failures = 0
    failures += cmd_radii(cfg)

    ns = argparse.Namespace(context="large", r_word="1111", minpoly=None)
    failures += cmd_necklaces(cfg, ns)
    ns = argparse.Namespace(context="small", r_word="11rr", minpoly=None)
    failures += cmd_necklaces(cfg, ns)

    failures += cmd_shells(cfg)

    for seq, fill in (("ABC", True), ("ABC", False), ("AB", True)):
        ns = argparse.Namespace(seq=seq, fill=fill)
        failures += cmd_pack(cfg, ns)
    return EXIT_OK if failures == 0 else EXIT_REPRODUCTION


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="bisphere",
        description="Certified classification of compact packings of 3-space "
                    "by spheres of two sizes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=int, default=64,
                        help="starting interval precision (>= 64)")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="text", dest="output_format")
    common.add_argument("--node-budget", type=int, default=200000,
                        help="search node budget for the shell completion")
    common.add_argument("--export", type=Path, default=None, metavar="PATH",
                        help="directory for report files, figures and meshes")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("radii", parents=[common],
                   help="enumerate and certify the candidate radius ratios")

    pn = sub.add_parser("necklaces", parents=[common],
                        help="search integer angle triples at a certified radius")
    pn.add_argument("context", choices=("large", "small"))
    pn.add_argument("--r-word", default=None,
                    help="certified radius named by its witness word, e.g. 1111")
    pn.add_argument("--minpoly", default=None,
                    help="comma-separated minimal polynomial coefficients, "
                         "low degree first, with one root in (0,1)")

    sub.add_parser("shells", parents=[common],
                   help="complete and embed the neighbor shells at sqrt2-1")

    pp = sub.add_parser("pack", parents=[common],
                        help="build, fill, and verify a close-packing")
    pp.add_argument("--seq", required=True, help="stacking word over A/B/C")
    pp.add_argument("--fill", action="store_true",
                    help="fill the octahedral holes with small spheres")

    sub.add_parser("all", parents=[common],
                   help="run the full certification chain")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(precision_bits=args.precision_bits,
                        output_format=args.output_format,
                        node_budget=args.node_budget,
                        output_path=args.export)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "radii":
            return cmd_radii(cfg)
        if args.command == "necklaces":
            return cmd_necklaces(cfg, args)
        if args.command == "shells":
            return cmd_shells(cfg)
        if args.command == "pack":
            return cmd_pack(cfg, args)
        if args.command == "all":
            return cmd_all(cfg)
    except (PrecisionExhausted, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
