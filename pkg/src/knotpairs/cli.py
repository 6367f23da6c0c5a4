"""Command-line front end.

Exit status: 0 on success, 1 for a mathematical violation under ``--strict``,
3 for an inconclusive verdict under ``--strict-inconclusive``, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import alexander, catalog as catalog_mod, homology
from .coset import DEFAULT_BUDGET
from .constructions import (
    Connectivity,
    KnotGroupPair,
    SpinInput,
    frame_twist_spin,
    knot_sum,
    single_stratum_report,
    suspension,
)
from .errors import KnotPairsError
from .kervaire import decoupled_map, kervaire_report, pair_report
from .linalg import abelianization
from .parsing import format_word, load_presentation, parse_word, presentation_to_json
from .presentation import GroupMap, Presentation
from .tietze import tietze_simplify
from .words import Word

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(KnotPairsError):
    pass


def _read_source(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return text


def resolve_presentation(text: str) -> tuple[Presentation, Word | None]:
    """``catalog:NAME``, ``@file`` (grammar or JSON) or literal grammar text; returns a default meridian if known."""
    if text.startswith("catalog:"):
        try:
            entry = catalog_mod.lookup(text.split(":", 1)[1])
        except KeyError as exc:
            raise InputError(str(exc.args[0])) from None
        return entry.presentation, entry.meridian
    return load_presentation(_read_source(text)), None


def _meridian(p: Presentation, text: str | None, default: Word | None, what: str = "--meridian") -> Word:
    if text is not None:
        return parse_word(text, p.generators)
    if default is None:
        raise InputError(f"{what} is required")
    return default


def parse_tau(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    out = {}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"--tau expects g=k pairs, got {part!r}")
        try:
            out[name.strip()] = int(value)
        except ValueError:
            raise InputError(f"--tau degree for {name.strip()!r} is not an integer: {value!r}") from None
    return out


def parse_images(text: str, source: Presentation, target: Presentation) -> GroupMap:
    images = {}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"map images expect g=word pairs, got {part!r}")
        images[name.strip()] = parse_word(value, target.generators)
    return GroupMap(source, target, images)


def load_pair(path_or_text: str) -> tuple[KnotGroupPair | None, dict[str, Any]]:
    """Pair file schema: boundary, ambient, meridian_boundary, meridian_ambient, optional inclusion."""
    raw = _read_source(path_or_text if path_or_text.startswith("@") or path_or_text.lstrip().startswith("{") else "@" + path_or_text)
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"pair file is not JSON: {exc}") from None
    for key in ("boundary", "ambient", "meridian_boundary", "meridian_ambient"):
        if key not in data:
            raise InputError(f"pair file lacks {key!r}")
    G = load_presentation(data["boundary"])
    Gbar = load_presentation(data["ambient"])
    g = parse_word(data["meridian_boundary"], G.generators)
    gbar = parse_word(data["meridian_ambient"], Gbar.generators)
    inc = data.get("inclusion")
    if inc is None:
        phi = decoupled_map(G, g, Gbar, gbar)
        provenance = "decoupled"
    else:
        phi = GroupMap(G, Gbar, {k: parse_word(v, Gbar.generators) for k, v in inc.items()})
        provenance = "given"
    return KnotGroupPair(G, Gbar, phi, g, gbar), {"provenance": provenance, "raw": data}


def _emit(args: argparse.Namespace, data: dict[str, Any], text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _verdict_exit(args: argparse.Namespace, violated: bool, inconclusive: bool) -> int:
    if getattr(args, "strict", False) and violated:
        return EXIT_VIOLATED
    if getattr(args, "strict_inconclusive", False) and inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _invariants_block(p: Presentation, meridian: Word | None, budget: int) -> dict[str, Any]:
    from .kervaire import check_weight_one

    out: dict[str, Any] = {"abelianization": str(abelianization(p))}
    if meridian is not None:
        out["meridian"] = format_word(meridian)
        out["meridian_quotient"] = check_weight_one(p, meridian, budget).status.value
    return out


def _report_text(title: str, conditions: dict[str, Any]) -> str:
    lines = [title]
    for name, c in conditions.items():
        lines.append(f"  {name:22s} {c.status.value:12s} {c.check}")
    return "\n".join(lines)


# -- commands ---------------------------------------------------------------

def cmd_parse(args):
    p, _ = resolve_presentation(args.presentation)
    _emit(args, presentation_to_json(p), str(p))
    return EXIT_OK


def cmd_abelianize(args):
    p, _ = resolve_presentation(args.presentation)
    inv = abelianization(p)
    _emit(args, {"presentation": str(p), "abelianization": inv.to_json(), "text": str(inv)}, str(inv))
    return EXIT_OK


def cmd_kervaire(args):
    p, default = resolve_presentation(args.presentation)
    g = _meridian(p, args.meridian, default)
    rep = kervaire_report(p, g, args.budget)
    _emit(args, rep.to_json(), _report_text(f"Kervaire conditions for {p} with g = {format_word(g)}", rep.conditions()))
    return _verdict_exit(args, rep.any_violated, rep.any_inconclusive)


def cmd_pair(args):
    if args.pair:
        pair, meta = load_pair(args.pair)
        phi = pair.inclusion if meta["provenance"] == "given" else None
        G, g, Gbar, gbar = pair.boundary, pair.meridian_boundary, pair.ambient, pair.meridian_ambient
    else:
        if not (args.boundary and args.ambient):
            raise InputError("give --pair FILE or both --boundary and --ambient")
        G, dg = resolve_presentation(args.boundary)
        Gbar, dgbar = resolve_presentation(args.ambient)
        g = _meridian(G, args.meridian, dg)
        gbar = _meridian(Gbar, args.ambient_meridian, dgbar, "--ambient-meridian")
        phi = parse_images(args.inclusion, G, Gbar) if args.inclusion else None
    rep = pair_report(G, g, Gbar, gbar, phi, args.budget)
    text = "\n".join(
        [
            _report_text(f"boundary group {G}", rep.report_G.conditions()),
            _report_text(f"ambient group {Gbar}", rep.report_Gbar.conditions()),
            f"  {'map_consistency':22s} {rep.map_consistency.status.value:12s} {rep.map_consistency.check}",
            f"  {'meridian_match':22s} {rep.meridian_match.status.value:12s} {rep.meridian_match.check}",
            f"  map provenance: {rep.map_provenance}",
        ]
    )
    _emit(args, rep.to_json(), text)
    return _verdict_exit(args, rep.any_violated, rep.any_inconclusive)


def _maybe_simplify(args, p: Presentation, meridian: Word | None) -> tuple[Presentation, Word | None, dict]:
    if not args.simplify:
        return p, meridian, {}
    res = tietze_simplify(p, args.simplify_budget)
    m = res.translate(meridian) if meridian is not None else None
    return res.presentation, m, {"simplified": True, "complete": res.complete, "steps": res.steps}


def cmd_sum(args):
    srcs = args.presentation or []
    if len(srcs) < 2:
        raise InputError("sum needs at least two --presentation arguments")
    mers = args.meridian or []
    knots = []
    for i, src in enumerate(srcs):
        p, default = resolve_presentation(src)
        knots.append((p, _meridian(p, mers[i] if i < len(mers) else None, default)))
    p, m = knots[0]
    for other in knots[1:]:
        p, m = knot_sum((p, m), other)
    p, m, info = _maybe_simplify(args, p, m)
    data = {"presentation": str(p), "presentation_json": presentation_to_json(p), "meridian": format_word(m), **info,
            "invariants": _invariants_block(p, m, args.budget)}
    _emit(args, data, f"{p}\nmeridian: {format_word(m)}\nabelianization: {abelianization(p)}")
    return EXIT_OK


def _pair_from_args(args) -> KnotGroupPair:
    if args.pair:
        return load_pair(args.pair)[0]
    if not args.presentation:
        raise InputError("give --pair FILE or --presentation")
    p, default = resolve_presentation(args.presentation)
    return KnotGroupPair.identity(p, _meridian(p, args.meridian, default))


def cmd_spin(args):
    pair = _pair_from_args(args)
    m_group = load_presentation(_read_source(args.m))
    res = frame_twist_spin(SpinInput(pair, m_group, parse_tau(args.tau)))
    knot, mk, info = _maybe_simplify(args, res.knot_group, res.meridian_knot)
    data = {
        "knot_group": str(knot),
        "knot_group_json": presentation_to_json(knot),
        "meridian_knot": format_word(mk),
        "boundary_group": str(res.boundary_group),
        "boundary_group_json": presentation_to_json(res.boundary_group),
        "meridian_boundary": format_word(res.meridian_boundary),
        "inclusion": {k: format_word(v) for k, v in res.inclusion.images.items()},
        "knot_invariants": _invariants_block(knot, mk, args.budget),
        "boundary_abelianization": str(abelianization(res.boundary_group)),
        **info,
    }
    text = (
        f"knot group:     {knot}\n  meridian {format_word(mk)}, abelianization {abelianization(knot)}\n"
        f"boundary group: {res.boundary_group}\n  abelianization {abelianization(res.boundary_group)}"
    )
    _emit(args, data, text)
    return EXIT_OK


def cmd_suspend(args):
    pair = _pair_from_args(args)
    res = suspension(pair)
    boundary, mb, info = _maybe_simplify(args, res.boundary_group, res.meridian_boundary)
    data = {
        "knot_group": str(res.knot_group),
        "knot_group_json": presentation_to_json(res.knot_group),
        "boundary_group": str(boundary),
        "boundary_group_json": presentation_to_json(boundary),
        "meridian": format_word(res.meridian_knot),
        "boundary_abelianization": str(abelianization(boundary)),
        **info,
    }
    text = f"knot group:     {res.knot_group}\nboundary group: {boundary}\n  abelianization {abelianization(boundary)}"
    _emit(args, data, text)
    return EXIT_OK


def cmd_stratum(args):
    p, default = resolve_presentation(args.presentation)
    lam = _meridian(p, args.meridian, default)
    m_group = load_presentation(_read_source(args.m)) if args.m else Presentation()
    rep = single_stratum_report(p, lam, m_group, args.connectivity, args.budget)
    lines = [f"kind: {rep.kind}"] + [f"  {k}: {v}" for k, v in rep.statement.items()]
    if rep.kervaire is not None:
        lines.append(_report_text(f"Kervaire conditions for boundary group {rep.boundary_group}", rep.kervaire.conditions()))
    _emit(args, rep.to_json(), "\n".join(lines))
    violated = rep.kervaire.any_violated if rep.kervaire else False
    inconclusive = rep.kervaire.any_inconclusive if rep.kervaire else False
    return _verdict_exit(args, violated, inconclusive)


def _load_complex(args, attr: str) -> homology.SimplicialComplex:
    if getattr(args, "standard", None):
        try:
            return homology.STANDARD_COMPLEXES[args.standard]()
        except KeyError:
            raise InputError(f"unknown standard complex {args.standard!r}") from None
    src = getattr(args, attr)
    if not src:
        raise InputError(f"--{attr} FILE or --standard NAME is required")
    return homology.load_complex(_read_source(src if src.startswith("@") or src.lstrip().startswith("[") else "@" + src))


def cmd_homology(args):
    if args.homology_cmd == "simplicial":
        K = _load_complex(args, "complex")
        h = homology.simplicial_homology(K)
        data = {"homology": h.to_json(), "text": [str(x) for x in h.as_list()],
                "f_vector": K.f_vector(), "euler_characteristic": K.euler_characteristic()}
        _emit(args, data, str(h))
        return EXIT_OK
    K = _load_complex(args, "sigma")
    hs = homology.simplicial_homology(K)
    pred = homology.predict_boundary_homology(hs, args.ambient)
    data = {"sigma_homology": hs.to_json(), "predicted": pred.to_json(),
            "text": [str(x) for x in pred.as_list(args.ambient - 3)]}
    lines = [f"H{i}(X) = {g}" for i, g in enumerate(pred.as_list(args.ambient - 3))]
    if args.check:
        oracle = homology.simplicial_homology(homology.circle_product(K))
        agree = all(pred[i] == oracle[i] for i in range(args.ambient - 2))
        data["oracle"] = oracle.to_json()
        data["oracle_agrees"] = agree
        lines.append(f"circle-product oracle agrees: {agree}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_alexander(args):
    try:
        p = alexander.parse_laurent(args.poly)
    except alexander.PolynomialError as exc:
        raise InputError(str(exc)) from None
    if args.alexander_cmd == "typek":
        cert = alexander.is_type_K_cyclic(p)
        _emit(args, {"polynomial": str(p), **cert.to_json()},
              f"{p}: p(1) = {cert.value_at_one}, type K: {cert.type_k}")
        return _verdict_exit(args, not cert.type_k, False)
    rep = alexander.p_complex_homology(p)
    text = (
        f"p(t) = {p}\n"
        f"cover homology: {', '.join(str(m) for m in rep.cover_homology)}\n"
        f"H(P): {', '.join(str(h) for h in rep.homology)}\n"
        f"Milnor consistent: {rep.milnor_consistent}; homology circle: {rep.homology_circle}"
    )
    _emit(args, rep.to_json(), text)
    return _verdict_exit(args, not rep.homology_circle, False)


def cmd_catalog(args):
    if args.catalog_cmd == "list":
        entries = catalog_mod.catalog()
        _emit(args, {"entries": [e.name for e in entries]}, "\n".join(f"{e.name:12s} {e.presentation}" for e in entries))
        return EXIT_OK
    try:
        entry = catalog_mod.lookup(args.name)
    except KeyError as exc:
        raise InputError(str(exc.args[0])) from None
    data = entry.to_json()
    text = f"{entry.name}: {entry.presentation}\n  meridian {format_word(entry.meridian)}"
    if args.recheck:
        rep = kervaire_report(entry.presentation, entry.meridian, args.budget)
        data["kervaire"] = rep.to_json()
        text += "\n" + _report_text("recomputed Kervaire conditions", rep.conditions())
    else:
        text += "\n" + "\n".join(f"  {k}: {v}" for k, v in entry.validation.items() if k != "weight_one_enumeration")
    _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="coset enumeration budget")
    common.add_argument("--strict", action="store_true", help="exit 1 on a violated condition")
    common.add_argument("--strict-inconclusive", action="store_true", help="exit 3 on an inconclusive condition")

    ap = argparse.ArgumentParser(prog="knotpairs", description="Knot group pairs: Kervaire checks, constructions, homology.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pres_args(p, meridian=True):
        p.add_argument("--presentation", "-p", help="grammar text, @file, or catalog:NAME")
        if meridian:
            p.add_argument("--meridian", "-m", help="meridian word")

    s = sub.add_parser("parse", parents=[common], help="normalize a presentation")
    s.add_argument("--presentation", "-p", required=True)
    s.set_defaults(func=cmd_parse)

    s = sub.add_parser("abelianize", parents=[common], help="abelianization invariants")
    s.add_argument("--presentation", "-p", required=True)
    s.set_defaults(func=cmd_abelianize)

    s = sub.add_parser("kervaire", parents=[common], help="Kervaire conditions for one group")
    s.add_argument("--presentation", "-p", required=True)
    s.add_argument("--meridian", "-m")
    s.set_defaults(func=cmd_kervaire)

    s = sub.add_parser("pair", parents=[common], help="Kervaire conditions for a group pair")
    s.add_argument("--pair", help="pair JSON file")
    s.add_argument("--boundary")
    s.add_argument("--ambient")
    s.add_argument("--meridian", "-m", help="boundary meridian")
    s.add_argument("--ambient-meridian")
    s.add_argument("--inclusion", help="images g=word,... (omit for the decoupled map)")
    s.set_defaults(func=cmd_pair)

    simplify = argparse.ArgumentParser(add_help=False)
    simplify.add_argument("--simplify", action="store_true", help="Tietze-simplify the output")
    simplify.add_argument("--simplify-budget", type=int, default=10_000)

    s = sub.add_parser("sum", parents=[common, simplify], help="knot sum")
    s.add_argument("--presentation", "-p", action="append", help="repeat once per summand")
    s.add_argument("--meridian", "-m", action="append", help="repeat once per summand, in order")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("spin", parents=[common, simplify], help="frame twist-spin")
    s.add_argument("--pair")
    pres_args(s)
    s.add_argument("--m", required=True, help="presentation of π1(M)")
    s.add_argument("--tau", default="", help="degrees g=k[,g=k]*")
    s.set_defaults(func=cmd_spin)

    s = sub.add_parser("suspend", parents=[common, simplify], help="suspension")
    s.add_argument("--pair")
    pres_args(s)
    s.set_defaults(func=cmd_suspend)

    s = sub.add_parser("stratum", parents=[common], help="single-stratum report")
    pres_args(s)
    s.add_argument("--m", help="presentation of π1(M)")
    s.add_argument("--connectivity", choices=[c.value for c in Connectivity], default="general")
    s.set_defaults(func=cmd_stratum)

    s = sub.add_parser("homology", help="simplicial homology and the boundary formula")
    hsub = s.add_subparsers(dest="homology_cmd", required=True)
    h = hsub.add_parser("simplicial", parents=[common])
    h.add_argument("--complex")
    h.add_argument("--standard", choices=sorted(homology.STANDARD_COMPLEXES))
    h.set_defaults(func=cmd_homology)
    h = hsub.add_parser("predict", parents=[common])
    h.add_argument("--sigma")
    h.add_argument("--standard", choices=sorted(homology.STANDARD_COMPLEXES))
    h.add_argument("--ambient", type=int, required=True)
    h.add_argument("--check", action="store_true", help="compare with the circle-product oracle")
    h.set_defaults(func=cmd_homology)

    s = sub.add_parser("alexander", help="Laurent polynomial checks")
    asub = s.add_subparsers(dest="alexander_cmd", required=True)
    for name in ("typek", "pcomplex"):
        a = asub.add_parser(name, parents=[common])
        a.add_argument("--poly", required=True)
        a.set_defaults(func=cmd_alexander)

    s = sub.add_parser("catalog", help="validated knot groups")
    csub = s.add_subparsers(dest="catalog_cmd", required=True)
    c = csub.add_parser("list", parents=[common])
    c.set_defaults(func=cmd_catalog)
    c = csub.add_parser("show", parents=[common])
    c.add_argument("name")
    c.add_argument("--recheck", action="store_true", help="recompute the Kervaire report")
    c.set_defaults(func=cmd_catalog)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (KnotPairsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
