"""
Command-line front end.

    python -m schubaut --type A --rank 2 --word 1,2
    python -m schubaut --type B --rank 2 --word 2,1 --kernel
    python -m schubaut --type D --rank 4 --survey --smooth-only --json --jobs 4

Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
4 internal invariant violated, 5 request refused (kernel description
outside simply-laced types).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import autreport
from .cache import TableCache
from .errors import InvalidInput, InvariantViolation, Refused, ResourceLimit
from .rootsys import ALLOWED_RANKS, RootSystem, build
from .weyl import DEFAULT_CAP, from_word

SCHEMA = "schubaut.report/1"
CONVENTION = ("B is the negative Borel (roots R-); g/b has the positive roots as weights; "
              "weights are coordinates in the simple-root basis with Bourbaki labels")

EXIT_OK, EXIT_INVALID, EXIT_RESOURCE, EXIT_INVARIANT, EXIT_REFUSED = 0, 2, 3, 4, 5


@dataclass
class QueryConfig:
    type_letter: str
    rank: int
    word: tuple[int, ...] | None = None
    survey: bool = False
    smooth_only: bool = False
    json: bool = False
    kernel: bool = False
    cohomology: tuple = ("g/b", "b")
    cap: int = DEFAULT_CAP
    cache: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if (self.word is None) == (not self.survey):
            raise InvalidInput("give exactly one of --word or --survey")
        if self.cap <= 0:
            raise InvalidInput("--cap must be positive")
        if self.jobs <= 0:
            raise InvalidInput("--jobs must be positive")


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    out = []
    for pos, tok in enumerate(text.split(",")):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise InvalidInput(f"--word: entry {tok!r} at position {pos} is not an integer") from None
    return tuple(out)


def parse_cohomology(text: str):
    if text in ("b", "g/b"):
        return text
    if text.startswith("line:"):
        coords = text[5:]
        out = []
        for pos, tok in enumerate(coords.split(",")):
            try:
                out.append(int(tok))
            except ValueError:
                raise InvalidInput(
                    f"--cohomology: coordinate {tok!r} at position {pos} is not an integer") from None
        return tuple(out)
    raise InvalidInput(f"--cohomology: expected b, g/b or line:<coords>, got {text!r}")


# ---------------------------------------------------------------------------
# serialization


def _roots(roots) -> list:
    return [list(r) for r in sorted(roots, key=lambda r: (-sum(r), tuple(-x for x in r)))]


def system_doc(rs: RootSystem) -> dict:
    return {
        "type": rs.type_letter,
        "rank": rs.rank,
        "simply_laced": rs.simply_laced,
        "cartan": [list(r) for r in rs.cartan],
        "highest_long_root": list(rs.highest_long_root),
        "highest_short_root": list(rs.highest_short_root) if rs.highest_short_root else None,
    }


def verdict_doc(v: autreport.AutVerdict) -> dict:
    return {
        "smooth": v.smooth,
        "criterion_holds": v.criterion_holds,
        "h0_b_zero": v.h0_b_zero,
        "semistable_nonempty": v.semistable_nonempty,
        "h0_tangent_is_adjoint": v.h0_tangent_is_adjoint,
        "phi_surjective": v.phi_surjective,
        "phi_injective": v.phi_injective,
        "aut0_equals_P_w": v.aut0_equals_P_w,
        "dim_P_w": v.dim_P_w,
        "dim_K_w": v.dim_K_w,
        "dim_K_w_upper": v.dim_K_w_upper,
        "dim_Aut0": v.dim_Aut0,
        "dim_Aut0_is_lower_bound": v.dim_Aut0_is_lower_bound,
        "kernel_torus_codim": v.kernel_torus_codim,
        "kernel_torus_component_group_order": v.kernel_torus_component_group_order,
        "kernel_unipotent_roots": None if v.kernel_unipotent_roots is None else _roots(v.kernel_unipotent_roots),
    }


def report_doc(rep: autreport.SchubertReport, kernel: autreport.KernelStructure | None = None) -> dict:
    f = rep.facts
    doc = {
        "schema": SCHEMA,
        "convention": CONVENTION,
        "system": system_doc(rep.rs),
        "element": {"word": list(f.w.word), "label": f.w.label, "length": f.dim},
        "schubert": {
            "smooth": f.smooth,
            "rationally_smooth": f.rationally_smooth,
            "reflections_below": f.tangent_dim_at_base,
            "left_descents": sorted(f.left_descents),
            "poincare": list(f.poincare),
        },
        "verdict": verdict_doc(rep.verdict),
        "cohomology": [
            {"module": c.name, "h0": c.h0.as_json(), "h1": c.h1.as_json(), "exact": c.exact,
             "h1_upper": None if c.h1_upper is None else c.h1_upper.as_json()}
            for c in rep.cohomology
        ],
    }
    if kernel is not None:
        doc["kernel"] = {
            "torus_dim": kernel.torus_dim,
            "torus_codim": kernel.torus_codim,
            "component_group_order": kernel.component_group_order,
            "unipotent_roots": _roots(kernel.unipotent_roots),
            "dim": kernel.dim,
        }
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _char_text(c) -> str:
    if not c:
        return "0"
    return " + ".join(f"{m}*e^({','.join(map(str, mu))})" if m != 1 else f"e^({','.join(map(str, mu))})"
                      for mu, m in c.sorted_terms())


def _fmt(x) -> str:
    return "n/a" if x is None else str(x)


def report_text(doc: dict) -> str:
    s, e, sch, v = doc["system"], doc["element"], doc["schubert"], doc["verdict"]
    labels = ", ".join(f"{i + 1}=alpha_{i + 1}" for i in range(s["rank"]))
    lines = [
        f"{s['type']}{s['rank']}  (Bourbaki labels {labels})",
        f"w = {e['label']}   length {e['length']}",
        f"  smooth: {sch['smooth']}   rationally smooth: {sch['rationally_smooth']}   "
        f"reflections below w: {sch['reflections_below']}",
        f"  P_w generated by B and: {sch['left_descents'] or 'nothing (P_w = B)'}   dim P_w = {v['dim_P_w']}",
        f"  poincare: {sch['poincare']}",
        f"  criterion w^-1(alpha_0) < 0: {v['criterion_holds']}",
        f"  H^0(w, b) = 0: {v['h0_b_zero']}   semistable locus nonempty: {v['semistable_nonempty']}   "
        f"H^0(w, g/b) {'= ' if s['simply_laced'] else 'contains '}g: {v['h0_tangent_is_adjoint']}",
    ]
    if v["smooth"]:
        if s["simply_laced"]:
            aut = "Aut0 = P_w" if v["aut0_equals_P_w"] else f"Aut0 = P_w / K_w, dim K_w = {v['dim_K_w']}"
            lines.append(f"  {aut}   dim Aut0 = {v['dim_Aut0']}")
            lines.append(f"  kernel: torus codim {v['kernel_torus_codim']}, component group order "
                         f"{v['kernel_torus_component_group_order']}, unipotent roots "
                         f"{v['kernel_unipotent_roots']}")
        else:
            lines.append(f"  phi_w injective: {v['phi_injective']}   dim Aut0 >= {v['dim_Aut0']}")
    else:
        lines.append("  singular: automorphism statements not applicable, cohomology only")
    for c in doc["cohomology"]:
        tag = "" if c["exact"] else " (lower bound)"
        lines.append(f"  H^0(w, {c['module']}){tag} = {_char_from_json(c['h0'])}")
        lines.append(f"  H^1(w, {c['module']}){tag} = {_char_from_json(c['h1'])}")
        if c.get("h1_upper") is not None:
            lines.append(f"  H^1(w, {c['module']}) upper bound = {_char_from_json(c['h1_upper'])}")
    if "kernel" in doc:
        k = doc["kernel"]
        lines.append(f"  K_w: torus dim {k['torus_dim']} (codim {k['torus_codim']}, "
                     f"component group order {k['component_group_order']}), "
                     f"unipotent roots {k['unipotent_roots']}, dim {k['dim']}")
    return "\n".join(lines) + "\n"


def _char_from_json(terms) -> str:
    if not terms:
        return "0"
    return " + ".join(("" if m == 1 else f"{m}*") + f"e^({','.join(map(str, mu))})" for mu, m in terms)


# ---------------------------------------------------------------------------
# survey


def _row_verdict(v: autreport.AutVerdict) -> str:
    if not v.smooth:
        return "singular"
    if v.simply_laced:
        return "Aut0=P_w" if v.criterion_holds else "Aut0=P_w/K_w"
    return "injective" if v.criterion_holds else "not injective"


def survey_rows(type_letter: str, rank: int, words: list, cap: int, smooth_only: bool) -> list[dict]:
    rs = build(type_letter, rank)
    rows = []
    for wd in words:
        w = from_word(rs, wd)
        v = autreport.verdict(rs, w, cap)
        if smooth_only and not v.smooth:
            continue
        rows.append({"word": list(w.word), "label": w.label, "length": w.length,
                     "smooth": v.smooth, "criterion": v.criterion_holds,
                     "dim_K_w": v.dim_K_w, "verdict": _row_verdict(v)})
    return rows


def run_survey(cfg: QueryConfig) -> dict:
    rs = build(cfg.type_letter, cfg.rank)
    tables = TableCache.from_env(cfg.cache).tables(rs, cfg.cap)
    words = [tuple(wd) for wd in tables["elements"]]
    if cfg.jobs > 1 and len(words) > 1:
        chunks = [words[k::cfg.jobs] for k in range(cfg.jobs)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            parts = ex.map(survey_rows, [cfg.type_letter] * len(chunks), [cfg.rank] * len(chunks),
                           chunks, [cfg.cap] * len(chunks), [cfg.smooth_only] * len(chunks))
            rows = [r for part in parts for r in part]
    else:
        rows = survey_rows(cfg.type_letter, cfg.rank, words, cfg.cap, cfg.smooth_only)
    rows.sort(key=lambda r: (r["length"], r["word"]))
    return {"schema": SCHEMA, "convention": CONVENTION, "system": system_doc(rs),
            "smooth_only": cfg.smooth_only, "count": len(rows), "rows": rows}


def survey_text(doc: dict) -> str:
    s = doc["system"]
    head = f"{'word':<28}{'len':>4}  {'smooth':<7}{'crit':<6}{'dim_K_w':>8}  verdict"
    lines = [f"{s['type']}{s['rank']}: {doc['count']} elements", head]
    for r in doc["rows"]:
        lines.append(f"{r['label']:<28}{r['length']:>4}  {str(r['smooth']):<7}{str(r['criterion']):<6}"
                     f"{_fmt(r['dim_K_w']):>8}  {r['verdict']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point


def run_query(cfg: QueryConfig) -> str:
    if cfg.survey:
        doc = run_survey(cfg)
        return dumps(doc) if cfg.json else survey_text(doc)
    rs = build(cfg.type_letter, cfg.rank)
    w = from_word(rs, cfg.word)
    kernel = autreport.kernel_structure(rs, w, cfg.cap) if cfg.kernel else None
    rep = autreport.report(rs, w, cfg.cohomology, cfg.cap)
    doc = report_doc(rep, kernel)
    return dumps(doc) if cfg.json else report_text(doc)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="schubaut",
        description="Automorphism groups and tangent cohomology of Schubert varieties in G/B.")
    p.add_argument("--type", required=True, choices=sorted(ALLOWED_RANKS), type=str.upper,
                   help="Cartan type letter")
    p.add_argument("--rank", required=True, type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="comma-separated 1-based simple reflection labels, or 'e'")
    g.add_argument("--survey", action="store_true", help="one row per Weyl group element")
    p.add_argument("--smooth-only", action="store_true", help="survey: keep smooth X(w) only")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--kernel", action="store_true", help="print the kernel K_w (simply-laced only)")
    p.add_argument("--cohomology", action="append", metavar="b|g/b|line:<coords>",
                   help="cohomology to report (repeatable); default g/b and b")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on |W| and intervals")
    p.add_argument("--cache", help="cache directory (default: $SCHUBAUT_CACHE)")
    p.add_argument("--jobs", type=int, default=1, help="survey worker processes")
    return p


def config_from_args(ns: argparse.Namespace) -> QueryConfig:
    coh = tuple(parse_cohomology(c) for c in ns.cohomology) if ns.cohomology else ("g/b", "b")
    return QueryConfig(
        type_letter=ns.type, rank=ns.rank,
        word=parse_word(ns.word) if ns.word is not None else None,
        survey=ns.survey, smooth_only=ns.smooth_only, json=ns.json, kernel=ns.kernel,
        cohomology=coh, cap=ns.cap, cache=ns.cache, jobs=ns.jobs)


def _error(ns, kind: str, msg: str, code: int) -> int:
    print(f"schubaut: {kind}: {msg}", file=sys.stderr)
    if ns is not None and getattr(ns, "json", False):
        sys.stdout.write(dumps({"schema": SCHEMA, "error": {"kind": kind, "message": msg, "exit_code": code}}))
    return code


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        out = run_query(config_from_args(ns))
    except Refused as e:
        return _error(ns, "refused", str(e), EXIT_REFUSED)
    except ResourceLimit as e:
        return _error(ns, "too large", str(e), EXIT_RESOURCE)
    except InvalidInput as e:
        return _error(ns, "invalid input", str(e), EXIT_INVALID)
    except (InvariantViolation, AssertionError) as e:
        return _error(ns, "invariant violation", str(e), EXIT_INVARIANT)
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
