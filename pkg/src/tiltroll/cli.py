"""Command line front end.

Exit codes: 0 on success, 2 when a mathematical verdict is NO or a
verification fails, 1 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from pathlib import Path

from . import __version__
from .derived import format_complex, parse_complex
from .errors import NotAdmissibleCut, ParseError, TiltRollError, TruncationTooSmall
from .quiver_core import format_presentation, parse_presentation, to_dot

EXIT_OK, EXIT_INPUT, EXIT_NO = 0, 1, 2


class Config:
    """Validated command line settings."""

    def __init__(self, ns):
        self.command = ns.command
        self.inputs = [Path(p) for p in getattr(ns, "inputs", []) or []]
        self.truncation = ns.truncation
        self.window = ns.window
        self.format = ns.format
        self.seed = ns.seed
        self.output = Path(ns.output) if ns.output else None
        self.ns = ns
        if self.truncation is not None and self.truncation < 2:
            raise ParseError("--truncation must be at least 2")
        if self.window is not None and not (self.window[0] <= 0 and self.window[1] >= 1):
            raise ParseError("--window must contain degrees 0 and 1")


def _window(text):
    try:
        lo, hi = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("window is 'lo,hi'") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("window needs lo <= hi")
    return lo, hi


def _jsonable(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "numerator") and not isinstance(x, (int, bool)):
        return str(x) if x.denominator != 1 else int(x)
    return x


def _dump(obj):
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n"


def _read(path: Path):
    try:
        return path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _is_complex(text):
    for ln in text.splitlines():
        s = ln.split("#", 1)[0].strip()
        if s:
            return s.startswith("complex")
    return False


def load_presentation(cfg: Config, path: Path):
    return parse_presentation(_read(path), cfg.truncation)


def load_complex(cfg: Config, path: Path):
    """A tilting complex from a complex file, or realized from a presentation by search."""
    text = _read(path)
    if _is_complex(text):
        return parse_complex(text)
    from .dynkincut import realize_by_search

    p = parse_presentation(text, cfg.truncation)
    found = realize_by_search(p)
    if found is None:
        raise TiltRollError(f"no tilting complex with endomorphism algebra {p.name} in the search window")
    return found[1]


# ------------------------------------------------------------------ commands


def cmd_check(cfg):
    from .dynkincut import with_adequate_bound
    from .endoalg import algebra_from_presentation, gldim
    from .quiver_core import chordless_cycles, minimal_relations

    p = load_presentation(cfg, cfg.inputs[0])
    if cfg.truncation is None:
        p = with_adequate_bound(p)
    qb = p.quotient_basis()
    alg = algebra_from_presentation(p)
    rng = random.Random(cfg.seed)
    idx = list(range(alg.dim))
    triples = [tuple(rng.choice(idx) for _ in range(3)) for _ in range(min(200, alg.dim ** 3))]
    g = gldim(alg, 2 * len(p.quiver.vertices) + 2)
    out = {
        "name": p.name,
        "dim": qb.dim,
        "truncation_bound": p.truncation_bound,
        "schurian": qb.is_schurian(),
        "acyclic": p.quiver.is_acyclic(),
        "gldim": g,
        "minimal_relations": [str(r) for r in minimal_relations(p)],
        "chordless_cycles": [{"vertices": list(c.vertices), "oriented": c.oriented} for c in chordless_cycles(p.quiver)],
        "associativity_spot_check": alg.check_associative(triples),
        "cartan": alg.cartan(),
    }
    return out, EXIT_OK, p


def cmd_form(cfg):
    from . import exactlin as el
    from .dynkincut import tits_form_of, with_adequate_bound
    from .forms import is_positive_definite

    p = load_presentation(cfg, cfg.inputs[0])
    if cfg.truncation is None:
        p = with_adequate_bound(p)
    q = p.quiver
    tf = tits_form_of(p)
    pd = is_positive_definite(tf.companion)
    out = {
        "vertices": list(q.vertices),
        "quasi_cartan": tf.companion.tolist(),
        "leading_minors": el.leading_principal_minors(tf.companion.matrix),
        "positive_definite": pd,
    }
    return out, EXIT_OK, None


def _algebra_out(alg, cfg, extra=None):
    from .endoalg import extract_presentation

    pres = extract_presentation(alg, alg.name).presentation
    out = {"algebra": alg.to_json(), "presentation": pres.to_json(), "presentation_text": format_presentation(pres)}
    out.update(extra or {})
    return out, pres


def cmd_relext(cfg):
    from .endoalg import relation_extension

    t = load_complex(cfg, cfg.inputs[0])
    r = relation_extension(t)
    out, pres = _algebra_out(r.algebra, cfg, {"new_arrows": r.new_arrows})
    return out, EXIT_OK, pres


def cmd_cluster(cfg):
    from .endoalg import cluster_algebra_of

    t = load_complex(cfg, cfg.inputs[0])
    c = cluster_algebra_of(t, cfg.window or (-3, 6))
    out, pres = _algebra_out(c, cfg, {"degrees": c.degrees()})
    return out, EXIT_OK, pres


def cmd_pi(cfg):
    from .endoalg import cluster_algebra_of, end_algebra, projection_pi, quivers_match

    t = load_complex(cfg, cfg.inputs[0])
    c = cluster_algebra_of(t, cfg.window or (-3, 6))
    r = end_algebra(t, (0, 1), name="R(B)")
    rep = projection_pi(c, r)
    out = rep.to_json()
    out["quivers_match"] = quivers_match(c, r)
    good = rep.multiplicative and rep.split and rep.kernel_in_rad2 and rep.kernel_is_eta_square
    return out, EXIT_OK if good else EXIT_NO, None


def cmd_roll(cfg):
    from .rolling import roll_steps, roll_to_tilted

    text = _read(cfg.inputs[0])
    t = parse_complex(text)
    if cfg.ns.to_tilted:
        trace = roll_to_tilted(t, cfg.ns.max_steps)
    else:
        trace = roll_steps(t, cfg.ns.steps)
    records = [s.to_json(h) for h, s in enumerate(trace.steps)]
    if cfg.ns.dot_dir:
        d = Path(cfg.ns.dot_dir)
        d.mkdir(parents=True, exist_ok=True)
        for h, s in enumerate(trace.steps):
            (d / f"B{h}.dot").write_text(to_dot(s.presentation))
    out = {"steps": records, "first_tilted": trace.first_tilted()}
    last = trace.steps[-1].presentation
    return out, EXIT_OK, last


def cmd_cut(cfg):
    from .quiver_core import cut_quotient, enumerate_admissible_cuts

    p = load_presentation(cfg, cfg.inputs[0])
    if cfg.ns.apply is not None:
        ids = [s.strip() for s in cfg.ns.apply.split(",") if s.strip()]
        quo = cut_quotient(p, ids)
        return {"cut": sorted(ids), "presentation": quo.to_json(),
                "presentation_text": format_presentation(quo)}, EXIT_OK, quo
    cuts = [c.sorted_ids() for c in enumerate_admissible_cuts(p.quiver)]
    return {"cuts": cuts, "count": len(cuts)}, EXIT_OK if cuts else EXIT_NO, None


def cmd_synth(cfg):
    from .dynkincut import synth_cluster_relations

    p = load_presentation(cfg, cfg.inputs[0])
    c = synth_cluster_relations(p.quiver, name=p.name)
    return {"presentation": c.to_json(), "presentation_text": format_presentation(c)}, EXIT_OK, c


def cmd_verify_iff(cfg):
    from .dynkincut import iterated_tilted_dynkin_decision

    p = load_presentation(cfg, cfg.inputs[0])
    d = iterated_tilted_dynkin_decision(p, stop_at_first=not cfg.ns.all_stages)
    out = d.to_json()
    if cfg.ns.cross_check and d.verdict:
        from .dynkincut import realize_by_search

        found = realize_by_search(p)
        out["search_realization"] = None if found is None else {"type": found[0], "complex": format_complex(found[1])}
    return out, EXIT_OK if d.verdict else EXIT_NO, None


def cmd_corpus(cfg):
    from . import corpus

    suites = {
        "cut": corpus.run_cut_suite,
        "pi": corpus.run_pi_suite,
        "equiv": corpus.run_equivalence_suite,
        "roll": corpus.run_roll_suite,
    }
    chosen = list(suites) if cfg.ns.suite == "all" else [cfg.ns.suite]
    out = {name: suites[name](cfg.ns.type) for name in chosen}
    ok = all(r["ok"] for r in out.values())
    return out, EXIT_OK if ok else EXIT_NO, None


COMMANDS = {
    "check": cmd_check,
    "form": cmd_form,
    "relext": cmd_relext,
    "cluster": cmd_cluster,
    "pi": cmd_pi,
    "roll": cmd_roll,
    "cut": cmd_cut,
    "synth": cmd_synth,
    "verify-iff": cmd_verify_iff,
    "corpus": cmd_corpus,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--truncation", type=int, help="truncation bound N for path spaces")
    common.add_argument("--window", type=_window, help="degree window lo,hi for the orbit algebra")
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    ap = argparse.ArgumentParser(prog="tiltroll", description="Iterated tilted algebras, rolling and admissible cuts.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_, nargs=1):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if nargs:
            sp.add_argument("inputs", nargs=nargs, metavar="file")
        return sp

    add("check", "validate a presentation and report basic invariants")
    add("form", "Tits form companion, minors and positivity")
    add("relext", "relation extension of End(T)")
    add("cluster", "orbit algebra of T in the cluster category")
    add("pi", "projection from the cluster-tilted algebra to the relation extension")
    sp = add("roll", "roll a tilting complex")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--steps", type=int)
    g.add_argument("--to-tilted", action="store_true")
    sp.add_argument("--max-steps", type=int, default=50)
    sp.add_argument("--dot-dir", help="write one DOT file per step here")
    sp = add("cut", "admissible cuts of a presentation's quiver")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--enumerate", action="store_true")
    g.add_argument("--apply", metavar="ID,ID,...")
    add("synth", "forced cluster-tilted relations on a quiver")
    sp = add("verify-iff", "decide iterated tilted of Dynkin type via admissible cuts")
    sp.add_argument("--all-stages", action="store_true", help="keep running later stages after a failure")
    sp.add_argument("--cross-check", action="store_true", help="also realize by a tilting complex search")
    sp = add("corpus", "exhaustive invariant suites for a Dynkin type", nargs=0)
    sp.add_argument("type", help="e.g. A4 or D4")
    sp.add_argument("--suite", choices=("cut", "pi", "equiv", "roll", "all"), default="all")
    return ap


def _render(cfg, out, pres):
    if cfg.format == "json":
        return _dump(out)
    if cfg.format == "dot":
        if pres is None:
            raise ParseError(f"{cfg.command} has no DOT output")
        return to_dot(pres)
    if pres is not None:
        return format_presentation(pres)
    return _dump(out)


def main(argv=None):
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = Config(ns)
        out, code, pres = COMMANDS[cfg.command](cfg)
        text = _render(cfg, out, pres)
    except (ParseError, TruncationTooSmall, NotAdmissibleCut) as e:
        err = {"error": type(e).__name__, "message": str(e),
               "line": getattr(e, "line", None), "column": getattr(e, "column", None)}
        sys.stderr.write(_dump(err))
        return EXIT_INPUT
    except TiltRollError as e:
        err = {"error": type(e).__name__, "message": str(e)}
        sys.stdout.write(_dump(err))
        return EXIT_NO
    if cfg.output:
        cfg.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
