"""Command-line front end.

Subcommands: ring, line, verify, bks, search, entangle, correspond, map.
Output formats: text (fixed-width tables), json (schema-stable), dot
(graphs).  Exit codes: 0 ok, 2 claim-mismatch (--check), 3 input error,
4 internal error.  --check runs embed the documented expectations for the
built-in objects; ambiguous claims are reported informationally and never
fail the run.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from fractions import Fraction

from . import correspond as co
from . import entangle as en
from . import magic as mg
from . import projline as pl
from . import rings as rg
from .magic import DeciderDisagreement
from .pauli import PauliError, make_pauli

EXIT_OK, EXIT_CLAIM, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3, 4

INPUT_ERRORS = (rg.RingError, pl.LineError, mg.ConfigError, PauliError,
                en.EntangleError, ValueError)


class Claims:
    """Named pass/fail expectations plus purely informational notes."""

    def __init__(self):
        self.checked: list[tuple[str, bool, str]] = []
        self.notes: list[tuple[str, str]] = []

    def expect(self, name: str, ok: bool, detail: str = ""):
        self.checked.append((name, bool(ok), detail))

    def note(self, name: str, detail: str):
        self.notes.append((name, detail))

    @property
    def failed(self) -> list[str]:
        return [n for n, ok, _ in self.checked if not ok]

    def as_dict(self):
        return {
            "checked": [{"claim": n, "ok": ok, "detail": d}
                        for n, ok, d in self.checked],
            "informational": [{"claim": n, "detail": d} for n, d in self.notes],
        }

    def text_lines(self):
        out = []
        for n, ok, d in self.checked:
            mark = "PASS" if ok else "FAIL"
            out.append(f"[{mark}] {n}" + (f": {d}" if d else ""))
        for n, d in self.notes:
            out.append(f"[INFO] {n}: {d}")
        return out


def _size_cap() -> int:
    return int(os.environ.get("RINGLINE_SIZE_CAP", rg.DEFAULT_SIZE_CAP))


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    return str(o)


def _render(data: dict, text_lines: list[str], fmt: str,
            dot: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, default=_json_default) + "\n"
    if fmt == "dot":
        if dot is None:
            raise ValueError("dot output is not defined for this command")
        return dot
    return "\n".join(text_lines) + "\n"


def _grid(cells: list[str], ncols: int) -> list[str]:
    width = max(len(c) for c in cells) + 2
    rows = []
    for i in range(0, len(cells), ncols):
        rows.append("".join(c.ljust(width) for c in cells[i:i + ncols]).rstrip())
    return rows


# ---------------------------------------------------------------------------
# subcommand runners; each returns (data, text_lines, dot or None, claims)


def run_ring(args):
    ring = rg.build_ring(args.ring, size_cap=_size_cap())
    claims = Claims()
    classes = {rg_el: ring.classify(rg_el) for rg_el in ring.sorted_elements()}
    units = [a for a, (k, _) in classes.items() if k == "unit"]
    zds = [a for a, (k, _) in classes.items() if k == "zero-divisor"]
    radical = rg.jacobson_radical(ring)
    quotient, hom = rg.quotient_by_radical(ring)
    data = {
        "ring": ring.spec_str(),
        "size": ring.size,
        "elements": [ring.el_str(a) for a in ring.sorted_elements()],
        "units": [ring.el_str(a) for a in units],
        "zero_divisors": [ring.el_str(a) for a in zds],
        "jacobson_radical": [ring.el_str(a) for a in radical],
        "quotient_size": quotient.size,
        "quotient_representatives": [quotient.el_str(a)
                                     for a in quotient.sorted_elements()],
        "quotient_map_is_homomorphism": rg.validate_hom(hom),
    }
    lines = [f"ring {data['ring']} with {ring.size} elements",
             "elements: " + " ".join(data["elements"]),
             "units: " + (" ".join(data["units"]) or "(none)"),
             "zero divisors: " + (" ".join(data["zero_divisors"]) or "(none)"),
             "jacobson radical: " + " ".join(data["jacobson_radical"]),
             f"radical quotient: {quotient.size} elements on representatives "
             + " ".join(data["quotient_representatives"])]
    return data, lines, None, claims


_KNOWN_COUNTS = {
    "gf(2)[x]/(x^3-x)": 18,
    "gf(2)[x]/(x^2-x)": 9,
    "gf(2)xgf(2)": 9,
    "gf(2)": 3, "gf(3)": 4, "gf(4)": 5, "gf(5)": 6, "gf(8)": 9,
}


def run_line(args):
    ring = rg.build_ring(args.ring, size_cap=_size_cap())
    catalog = pl.enumerate_points(ring)
    claims = Claims()
    spec_text = args.ring.lower().replace(" ", "")
    if args.check:
        if spec_text in _KNOWN_COUNTS:
            want = _KNOWN_COUNTS[spec_text]
            claims.expect(f"point count of the line over {spec_text}",
                          len(catalog) == want,
                          f"expected {want}, got {len(catalog)}")
        expected = pl.expected_point_count(ring)
        if expected is not None:
            claims.expect("closed-form point count matches enumeration",
                          expected == len(catalog),
                          f"closed form {expected}, enumeration {len(catalog)}")
    subsets = pl.distinguished_subsets(catalog)
    data = {
        "ring": ring.spec_str(),
        "points": [str(p) for p in catalog.points],
        "relation": [[pl._REL_CODE[r] for r in row] for row in catalog.relation],
        "distinguished": {k: sorted(str(p) for p in v)
                          for k, v in subsets.items()},
    }
    lines = [f"projective line over {ring.spec_str()}: "
             f"{len(catalog)} points"]
    lines += ["  " + str(p) for p in catalog.points]
    for k, v in data["distinguished"].items():
        lines.append(f"{k}: " + (" ".join(v) or "(none)"))
    dot = pl.catalog_dot(catalog, pl.NEIGHBOUR if args.graph == "neighbour"
                         else pl.DISTANT)
    _finish_claims(claims, data, lines)
    return data, lines, dot, claims


def _load_config(args) -> mg.Configuration:
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as f:
            return mg.config_from_json(f.read())
    return mg.builtin(args.builtin)


_SQUARE_EXPECT = {"row 1": 1, "row 2": 1, "row 3": 1,
                  "column 1": 1, "column 2": 1, "column 3": -1}
_PENT_EXPECT = {"edge top/lower-left": 1, "edge top/lower-right": 1,
                "edge left/lower-right": 1, "edge right/lower-left": 1,
                "horizontal": -1}


def run_verify(args):
    cfg = _load_config(args)
    report = mg.verify_magic(cfg)
    claims = Claims()
    result = mg.bks_decide(cfg) if report.magic or all(
        c.sign is not None for c in report.contexts) else None
    if args.check and getattr(args, "builtin", None):
        expect = _SQUARE_EXPECT if args.builtin == "mermin_square" else _PENT_EXPECT
        for c in report.contexts:
            claims.expect(f"{args.builtin}: {c.label} pairwise commuting",
                          c.commuting)
            claims.expect(f"{args.builtin}: {c.label} product sign "
                          f"{'+1' if expect[c.label] == 1 else '-1'}",
                          c.sign == expect[c.label], f"got {c.sign}")
        claims.expect(f"{args.builtin} is magic (no valuation)", report.magic)
        claims.expect(f"{args.builtin}: parity certificate spans all contexts",
                      result is not None and result.certificate ==
                      tuple(range(len(cfg.contexts))),
                      f"certificate {None if result is None else result.certificate}")
    data = {
        "geometry": cfg.geometry,
        "observables": [o.word for o in cfg.observables],
        "contexts": [{"label": c.label, "observables":
                      [cfg.observables[i].word for i in cfg.contexts[ci]],
                      "commuting": c.commuting, "sign": c.sign, "note": c.note}
                     for ci, c in enumerate(report.contexts)],
        "structural_errors": list(report.structural_errors),
        "magic": report.magic,
        "bks": _bks_dict(result) if result is not None else None,
    }
    lines = [f"configuration: {cfg.geometry} on {cfg.n} qubits"]
    if cfg.geometry == "square":
        lines += _grid([o.word for o in cfg.observables], 3)
    else:
        lines += ["  " + " ".join(o.word for o in cfg.observables)]
    for c in data["contexts"]:
        sign = {1: "+1", -1: "-1", None: "??"}[c["sign"]]
        comm = "commuting" if c["commuting"] else "NOT commuting"
        lines.append(f"{c['label']}: {' '.join(c['observables'])} "
                     f"[{comm}, sign {sign}]" + (f" ({c['note']})" if c["note"] else ""))
    for e in report.structural_errors:
        lines.append(f"structural error: {e}")
    lines.append(f"magic: {report.magic}")
    if data["bks"]:
        lines += _bks_lines(data["bks"])
    _finish_claims(claims, data, lines)
    return data, lines, None, claims


def _bks_dict(result: mg.BksResult):
    if result.valuation is not None:
        return {"valuation": {str(k): v for k, v in sorted(result.valuation.items())}}
    return {"certificate_contexts": list(result.certificate)}


def _bks_lines(d):
    if "valuation" in d:
        return ["valuation exists: " +
                " ".join(f"{k}:{'+1' if v == 1 else '-1'}"
                         for k, v in d["valuation"].items())]
    return ["no valuation; parity certificate over context indices "
            + " ".join(str(i) for i in d["certificate_contexts"])]


def run_bks(args):
    cfg = _load_config(args)
    result = mg.bks_decide(cfg)
    claims = Claims()
    data = {"geometry": cfg.geometry,
            "observables": [o.word for o in cfg.observables],
            "colorable": result.colorable,
            "result": _bks_dict(result)}
    lines = [f"BKS colorability for {cfg.geometry} configuration: "
             f"{'colorable' if result.colorable else 'NOT colorable'}"]
    lines += _bks_lines(data["result"])
    return data, lines, None, claims


def run_search(args):
    claims = Claims()
    if args.kind == "squares":
        results = mg.search_squares()
        complete = True
        orbit = mg.square_orbit_report(mg.SQUARE_WORDS)
    else:
        outcome = mg.search_pentagrams(budget=args.budget)
        results, complete = list(outcome.results), outcome.complete
        orbit = None
    reverified = all(mg.verify_magic(c).magic and
                     not mg.bks_decide(c).colorable for c in results)
    builtin_found = _contains_builtin(results, args.kind)
    if args.check:
        claims.expect(f"search {args.kind}: built-in configuration found",
                      builtin_found)
        claims.expect(f"search {args.kind}: all results re-verify as magic",
                      reverified)
    data = {
        "kind": args.kind,
        "count": len(results),
        "complete": complete,
        "builtin_found": builtin_found,
        "results": [json.loads(mg.config_to_json(c)) for c in results]
        if args.full else None,
    }
    lines = [f"search {args.kind}: {len(results)} result(s)"
             + ("" if complete else " [PARTIAL: budget exhausted]"),
             f"built-in configuration found: {builtin_found}",
             f"all results re-verified magic: {reverified}"]
    if orbit is not None:
        data["builtin_orbit"] = orbit
        lines.append(
            "arrangements of the built-in square's nine observables: "
            f"{orbit['arrangements']} in {orbit['orbits']} orbit(s) of sizes "
            f"{orbit['orbit_sizes']} under row/column permutation + transpose")
    _finish_claims(claims, data, lines)
    return data, lines, None, claims


def _contains_builtin(results, kind):
    name = "mermin_square" if kind == "squares" else "mermin_pentagram"
    ref = mg.builtin(name)
    key = _config_key(ref)
    return any(_config_key(c) == key for c in results)


def _config_key(cfg):
    return (frozenset(o.word for o in cfg.observables),
            frozenset(frozenset(cfg.observables[i].word for i in ctx)
                      for ctx in cfg.contexts))


def run_entangle(args):
    cfg = _load_config(args)
    claims = Claims()
    classifications = []
    for ci in range(len(cfg.contexts)):
        ops = cfg.context_ops(ci)
        cls = en.classify_context(ops)
        classifications.append((cfg.context_labels[ci], ops, cls))
    pairwise = []
    for (la, opsa, _), (lb, opsb, _) in itertools.combinations(
            classifications, 2):
        mu, _table = en.mutually_unbiased(opsa, opsb)
        pairwise.append({"contexts": [la, lb], "mutually_unbiased": mu})
    if args.check and getattr(args, "builtin", None) == "mermin_square":
        by_label = {l: c.classification for l, _, c in classifications}
        for label in ("row 1", "row 2", "column 1", "column 2"):
            claims.expect(f"{label} basis is product",
                          by_label[label] == "product", by_label[label])
        claims.expect("column 3 basis is maximally entangled",
                      by_label["column 3"] == "maximally-entangled",
                      by_label["column 3"])
        mu, table = en.mutually_unbiased(cfg.context_ops(0), cfg.context_ops(1))
        claims.expect("row 1 and row 2 bases mutually unbiased at 1/4",
                      mu and all(v == Fraction(1, 4)
                                 for r in table for v in r))
        claims.note("row 3 basis classification",
                    f"computed {by_label['row 3']}; this disagrees with the "
                    "documented expectation that every row basis is a "
                    "product basis")
    if args.check and getattr(args, "builtin", None) == "mermin_pentagram":
        by_label = {l: c for l, _, c in classifications}
        horiz = by_label["horizontal"]
        claims.expect("horizontal edge basis is maximally entangled "
                      "(1 bit across every 1-vs-2 bipartition)",
                      horiz.classification == "maximally-entangled",
                      horiz.classification)
    data = {
        "geometry": cfg.geometry,
        "contexts": [{
            "label": label,
            "observables": [o.word for o in ops],
            "class": cls.classification,
            "entropies": [{"-".join(map(str, part)): bits
                           for part, bits in table.items()}
                          for table in cls.entropies],
        } for label, ops, cls in classifications],
        "unbiasedness": pairwise,
    }
    lines = [f"entanglement classification for {cfg.geometry}"]
    for c in data["contexts"]:
        lines.append(f"{c['label']}: {' '.join(c['observables'])} -> {c['class']}")
    for p in pairwise:
        lines.append(f"{p['contexts'][0]} vs {p['contexts'][1]}: "
                     + ("mutually unbiased" if p["mutually_unbiased"]
                        else "not mutually unbiased"))
    _finish_claims(claims, data, lines)
    return data, lines, None, claims


def _parse_permutation(text, size):
    if text is None:
        return None
    perm = tuple(int(t) for t in text.split(","))
    if sorted(perm) != list(range(size)):
        raise ValueError(f"permutation must rearrange 0..{size - 1}")
    return perm


def run_correspond(args):
    claims = Claims()
    if args.variant == "square":
        perm = _parse_permutation(args.permute, 9)
        bij, cmp = co.square_correspondence(perm)
        if args.check and perm is None:
            degs = [sum(row) for row in cmp.commuting]
            claims.expect("square: commuting adjacency equals distant "
                          "adjacency under the slot bijection",
                          cmp.isomorphic_under_bijection,
                          f"{len(cmp.mismatches)} mismatching pair(s)")
            claims.expect("square: both comparison graphs are degree-4 regular",
                          degs == [4] * 9 and
                          [sum(r) for r in cmp.distant] == [4] * 9)
    else:
        perm = _parse_permutation(args.permute, 10)
        bij, cmp = co.pentagram_correspondence(args.variant, perm)
        claims.note(f"{args.variant}: commuting vs distant comparison",
                    f"{len(cmp.mismatches)} mismatching pair(s); no adjacency "
                    "preservation is asserted for the pentagram variants")
    data = {
        "variant": args.variant,
        "bijection": [{"slot": s, "observable": o.word, "point": str(p)}
                      for s, o, p in zip(bij.slots, bij.observables, bij.points)],
        "isomorphic_under_bijection": cmp.isomorphic_under_bijection,
        "mismatches": [[bij.slots[i], bij.slots[j]] for i, j in cmp.mismatches],
    }
    lines = [f"correspondence for {args.variant}"]
    for entry in data["bijection"]:
        lines.append(f"  {entry['slot']:>14}  {entry['observable']:<5} "
                     f"<-> {entry['point']}")
    lines.append("commuting adjacency == distant adjacency: "
                 f"{cmp.isomorphic_under_bijection} "
                 f"({len(cmp.mismatches)} mismatching pair(s))")
    if args.variant == "jacobson":
        stars = co.edge_star_points("jacobson")
        data["edge_star_points"] = [{"edge": label,
                                     "points": [str(p) for p in pts]}
                                    for label, pts in stars]
        for label, pts in stars:
            lines.append(f"{label}: point distant to the other three: "
                         + (" ".join(str(p) for p in pts) or "(none)"))
        if args.check:
            by_label = dict(stars)
            claims.expect("jacobson: (1,1) is the edge-star of the two top edges",
                          all(tuple(str(p) for p in by_label[l]) == ("(1,1)",)
                              for l in ("edge top/lower-left",
                                        "edge top/lower-right")))
            claims.expect("jacobson: (1,x^2+x+1) is the edge-star of the two "
                          "lower edges",
                          all(tuple(str(p) for p in by_label[l])
                              == ("(1,x^2+x+1)",)
                              for l in ("edge left/lower-right",
                                        "edge right/lower-left")))
            claims.expect("jacobson: the horizontal edge has no star point",
                          by_label["horizontal"] == ())
    dot = _correspond_dot(bij, cmp)
    _finish_claims(claims, data, lines)
    return data, lines, dot, claims


def _correspond_dot(bij, cmp):
    lines = ['graph "commuting (solid) vs distant (missing side dashed)" {']
    for s, o, p in zip(bij.slots, bij.observables, bij.points):
        lines.append(f'  "{s}" [label="{o.word}\\n{p}"];')
    n = len(bij.slots)
    for i in range(n):
        for j in range(i + 1, n):
            c, d = cmp.commuting[i][j], cmp.distant[i][j]
            if c and d:
                lines.append(f'  "{bij.slots[i]}" -- "{bij.slots[j]}";')
            elif c != d:
                style = "dashed" if c else "dotted"
                lines.append(f'  "{bij.slots[i]}" -- "{bij.slots[j]}" '
                             f'[style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_map(args):
    claims = Claims()
    if args.ring.lower().replace(" ", "") != co.R_CLUB_SPEC:
        raise ValueError(f"condensation is defined for {co.R_CLUB_SPEC}")
    rep = co.condensation(args.variant)
    per_edge = dict(rep.per_edge_images)
    if args.check:
        claims.expect(f"{args.variant}: horizontal edge condenses to "
                      f"{2 if args.variant == 'neighbourhood' else 4} points",
                      len(per_edge["horizontal"]) ==
                      (2 if args.variant == "neighbourhood" else 4),
                      " ".join(str(p) for p in per_edge["horizontal"]))
        if args.variant == "neighbourhood":
            claims.expect("neighbourhood: horizontal edge image is "
                          "{(x,x+1),(x+1,x)}",
                          tuple(str(p) for p in per_edge["horizontal"])
                          == ("(x,x+1)", "(x+1,x)"))
        claims.expect("points distant to (1,1) are "
                      "{(0,1),(1,0),(x,x+1),(x+1,x)}",
                      tuple(str(p) for p in rep.distant_to_unit_point)
                      == ("(0,1)", "(1,0)", "(x,x+1)", "(x+1,x)"))
    claims.note(f"{args.variant}: full-set condensation vs the points "
                "distant to (1,1)",
                "image " + " ".join(str(p) for p in rep.overall_image)
                + "; distant set " + " ".join(str(p)
                                              for p in rep.distant_to_unit_point)
                + "; image-only " + (" ".join(str(p)
                                              for p in rep.image_minus_distant)
                                     or "(none)")
                + "; distant-only " + (" ".join(str(p)
                                                for p in rep.distant_minus_image)
                                       or "(none)"))
    data = {
        "variant": rep.variant,
        "point_images": {str(k): str(v) for k, v in sorted(
            rep.point_images.items(), key=lambda kv: kv[0]._key())},
        "per_edge_images": [{"edge": label, "images": [str(p) for p in pts]}
                            for label, pts in rep.per_edge_images],
        "overall_image": [str(p) for p in rep.overall_image],
        "distant_to_(1,1)": [str(p) for p in rep.distant_to_unit_point],
        "image_minus_distant": [str(p) for p in rep.image_minus_distant],
        "distant_minus_image": [str(p) for p in rep.distant_minus_image],
    }
    lines = [f"condensation of the {rep.variant} ten-point configuration "
             "under the radical-quotient map"]
    for k, v in data["point_images"].items():
        lines.append(f"  {k} -> {v}")
    for entry in data["per_edge_images"]:
        lines.append(f"{entry['edge']}: {len(entry['images'])} distinct "
                     "image(s): " + " ".join(entry["images"]))
    lines.append("overall image: " + " ".join(data["overall_image"]))
    lines.append("distant to (1,1): " + " ".join(data["distant_to_(1,1)"]))
    _finish_claims(claims, data, lines)
    return data, lines, None, claims


def _finish_claims(claims: Claims, data: dict, lines: list[str]):
    if claims.checked or claims.notes:
        data["claims"] = claims.as_dict()
        lines.extend(claims.text_lines())


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ringline",
        description="projective ring lines, Pauli contexts and magic "
                    "configurations, exactly")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, dot_ok=False):
        p.add_argument("--format", choices=("text", "json") + (("dot",)
                       if dot_ok else ()), default="text")
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--check", action="store_true",
                       help="evaluate the documented expectations")

    p = sub.add_parser("ring", help="elements, units, radical, quotient")
    p.add_argument("--ring", required=True, help='e.g. "gf(2)[x]/(x^3-x)"')
    common(p)

    p = sub.add_parser("line", help="projective line catalog")
    p.add_argument("--ring", required=True)
    p.add_argument("--graph", choices=("distant", "neighbour"),
                   default="distant", help="which graph for dot output")
    common(p, dot_ok=True)

    for name, desc in (("verify", "context commutation, signs, magic flag"),
                       ("bks", "valuation or parity certificate"),
                       ("entangle", "eigenbasis entanglement classes")):
        p = sub.add_parser(name, help=desc)
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--builtin", choices=("mermin_square",
                                             "mermin_pentagram"))
        g.add_argument("--config", help="configuration JSON file")
        common(p)

    p = sub.add_parser("search", help="exhaustive square/pentagram search")
    p.add_argument("--kind", choices=("squares", "pentagrams"), required=True)
    p.add_argument("--budget", type=int, default=None,
                   help="search-node cap for pentagrams")
    p.add_argument("--full", action="store_true",
                   help="include every result in the report body")
    common(p)

    p = sub.add_parser("correspond", help="slot bijections and graph comparison")
    p.add_argument("--variant", choices=("square",) + co.VARIANTS,
                   required=True)
    p.add_argument("--permute", help="comma-separated slot permutation")
    common(p, dot_ok=True)

    p = sub.add_parser("map", help="condensation under the radical quotient")
    p.add_argument("--ring", default=co.R_CLUB_SPEC, dest="ring",
                   help="source ring (the 18-point line's ring)")
    p.add_argument("--variant", choices=co.VARIANTS, required=True)
    common(p)
    return ap


_RUNNERS = {"ring": run_ring, "line": run_line, "verify": run_verify,
            "bks": run_bks, "search": run_search, "entangle": run_entangle,
            "correspond": run_correspond, "map": run_map}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else 0
    try:
        data, lines, dot, claims = _RUNNERS[args.command](args)
        body = _render(data, lines, args.format, dot)
    except INPUT_ERRORS as e:
        sys.stderr.write(f"input error: {e}\n")
        return EXIT_INPUT
    except DeciderDisagreement as e:
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_CLAIM if claims.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
