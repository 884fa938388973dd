"""Command-line front end.

Parses parameters, dispatches to the library, and emits a report as
human-readable text (default), JSON, or CSV.  JSON output follows the schema
shipped as ``report_schema.json``; integers beyond the 53-bit float-safe
range are serialized as decimal strings so no consumer can lose precision.

Exit codes: 0 all checks passed, 1 a mathematical verification failed,
2 invalid input, 3 a computational effort limit was reached.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__, bazaikin, embedding, eschenburg, survey
from .arith import FactorizationIncomplete
from .bazaikin import BazParams
from .embedding import EmbeddingCertificate
from .eschenburg import EschParams
from .survey import SurveyRow, VerificationFailure

_JSON_SAFE = 2**53 - 1

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_EFFORT_EXCEEDED = 3


# ---------------------------------------------------------------------------
# argument parsing helpers


def _ints(text: str, count: int, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"{what} must be {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"{what} must be integers, got {text!r}") from None


def _esch_from_args(args: argparse.Namespace) -> EschParams:
    return EschParams(_ints(args.a, 3, "--a"), _ints(args.b, 3, "--b"))


def _baz_from_args(args: argparse.Namespace) -> BazParams:
    return BazParams(_ints(args.q, 5, "--q"))


def _factor_kwargs(args: argparse.Namespace) -> dict:
    kwargs = {}
    if args.factor_bound is not None:
        kwargs["trial_bound"] = args.factor_bound
    if args.seed is not None:
        kwargs["seed"] = args.seed
    return kwargs


# ---------------------------------------------------------------------------
# structured result builders (shared by the text, JSON, and CSV emitters)


def _esch_dict(e: EschParams) -> dict:
    return {"a": list(e.a), "b": list(e.b)}


def _baz_dict(q: BazParams) -> dict:
    return {"q": list(q.q), "qsum": q.qsum}


def _window_dict(w: range) -> dict:
    return {"lo": w.start, "hi": w[-1]}


def _offense_dicts(pairs) -> list[dict]:
    return [
        {"pair1": list(p1), "pair2": list(p2), "gcd": g}
        for p1, p2, g in pairs
    ]


def _cert_dict(cert: EmbeddingCertificate) -> dict:
    return {
        "esch": _esch_dict(cert.esch),
        "shift": cert.shift,
        "baz": _baz_dict(cert.baz),
        "baz_free": cert.baz_free,
        "baz_pc": cert.baz_pc,
        "esch_pc": cert.esch_pc,
        "h6": cert.h6,
        "offending_pairs": _offense_dicts(cert.offending_pairs),
    }


def _row_dict(row: SurveyRow) -> dict:
    return {
        "esch": _esch_dict(row.esch),
        "window": _window_dict(row.window),
        "verdicts": list(row.verdicts),
        "is_counterexample": row.is_counterexample,
        "h4": row.h4,
    }


def _q_formula(e: EschParams) -> str:
    """Symbolic candidate 5-tuple, e.g. '(79+2c, 1+2c, 1+2c, 5-2c, 25-2c)'."""
    heads = [2 * x + 1 for x in e.a] + [-(2 * e.b[1] + 1), -(2 * e.b[2] + 1)]
    terms = [f"{h}+2c" for h in heads[:3]] + [f"{h}-2c" for h in heads[3:]]
    return "(" + ", ".join(terms) + ")"


# ---------------------------------------------------------------------------
# text rendering


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _fmt_triple(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _fmt_esch(d: dict) -> str:
    return f"a={_fmt_triple(d['a'])} b={_fmt_triple(d['b'])}"


def _fmt_window(d: dict) -> str:
    return f"{d['lo']} <= c <= {d['hi']}"


def _fmt_offenses(offenses: list[dict]) -> str:
    return "; ".join(
        f"gcd(q{o['pair1'][0]}+q{o['pair1'][1]}, q{o['pair2'][0]}+q{o['pair2'][1]}) = {o['gcd']}"
        for o in offenses
    )


def _cert_lines(c: dict, indent: str = "") -> list[str]:
    lines = [
        f"{indent}{_fmt_esch(c['esch'])}  shift c={c['shift']}",
        f"{indent}  q = {_fmt_triple(c['baz']['q'])}",
        f"{indent}  non-singular: {_yn(c['baz_free'])}",
    ]
    if c["offending_pairs"]:
        lines.append(f"{indent}    {_fmt_offenses(c['offending_pairs'])}")
    lines.append(f"{indent}  positively curved (host): {_yn(c['baz_pc'])}")
    lines.append(f"{indent}  positively curved (submanifold): {_yn(c['esch_pc'])}")
    if c["baz_free"]:
        lines.append(f"{indent}  |H6| = {c['h6']}")
    return lines


def _row_line(r: dict) -> str:
    verdict = "counterexample" if r["is_counterexample"] else "embeds"
    marks = "".join("-" if ok else "x" for ok in r["verdicts"])
    return (
        f"{_fmt_esch(r['esch'])}  window {_fmt_window(r['window'])}  "
        f"[{marks}]  |H4|={r['h4']}  {verdict}"
    )


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (results, notes, summary, text lines, csv table)


def _cmd_verify_esch(args) -> dict:
    e = _esch_from_args(args)
    canonical = eschenburg.canonicalize(e)
    result = {
        "esch": _esch_dict(e),
        "free": eschenburg.is_free(e),
        "pc_some_metric": eschenburg.admits_positive_curvature(e),
        "pc_fixed_metric": eschenburg.is_pc_metric(e),
        "h4": eschenburg.h4_order(e),
        "kernel_order": eschenburg.kernel_order(e),
        "canonical": _esch_dict(canonical),
    }
    text = [
        _fmt_esch(result["esch"]),
        f"  free:                    {_yn(result['free'])}",
        f"  pc (some metric):        {_yn(result['pc_some_metric'])}",
        f"  pc (fixed metric):       {_yn(result['pc_fixed_metric'])}",
        f"  |H4|:                    {result['h4']}",
        f"  kernel order:            {result['kernel_order']}",
        f"  canonical form:          {_fmt_esch(result['canonical'])}",
    ]
    table = [
        ["a", "b", "free", "pc_some_metric", "pc_fixed_metric", "h4", "kernel_order",
         "canonical_a", "canonical_b"],
        [_fmt_triple(e.a), _fmt_triple(e.b), result["free"], result["pc_some_metric"],
         result["pc_fixed_metric"], result["h4"], result["kernel_order"],
         _fmt_triple(canonical.a), _fmt_triple(canonical.b)],
    ]
    return {"input": {"esch": _esch_dict(e)}, "results": [result], "text": text, "csv": table}


def _cmd_verify_baz(args) -> dict:
    q = _baz_from_args(args)
    all_odd = q.all_odd()
    offenses = _offense_dicts(bazaikin.freeness_failures(q))
    result = {
        "baz": _baz_dict(q),
        "all_odd": all_odd,
        "free": bazaikin.is_free_baz(q),
        "pc": bazaikin.is_pc_baz(q),
        "h6": bazaikin.h6_order(q) if all_odd else None,
        "offending_pairs": offenses,
    }
    text = [
        f"q = {_fmt_triple(q.q)}  (sum {q.qsum})",
        f"  all odd:            {_yn(all_odd)}"
        + ("" if all_odd else "  (even entries: "
           + ", ".join(f"q{i}" for i, v in enumerate(q.q, 1) if v % 2 == 0) + ")"),
        f"  free:               {_yn(result['free'])}",
    ]
    if offenses:
        text.append(f"    {_fmt_offenses(offenses)}")
    text.append(f"  positively curved:  {_yn(result['pc'])}")
    text.append(f"  |H6|:               {result['h6'] if all_odd else 'undefined (even entries)'}")
    table = [
        ["q", "all_odd", "free", "pc", "h6", "offending_pairs"],
        [_fmt_triple(q.q), all_odd, result["free"], result["pc"],
         result["h6"] if all_odd else "", _fmt_offenses(offenses)],
    ]
    return {"input": {"baz": _baz_dict(q)}, "results": [result], "text": text, "csv": table}


def _certs_csv(certs: list[dict]) -> list[list]:
    table = [["a", "b", "shift", "q", "baz_free", "baz_pc", "esch_pc", "h6", "offending_pairs"]]
    for c in certs:
        table.append([
            _fmt_triple(c["esch"]["a"]), _fmt_triple(c["esch"]["b"]), c["shift"],
            _fmt_triple(c["baz"]["q"]), c["baz_free"], c["baz_pc"], c["esch_pc"],
            c["h6"], _fmt_offenses(c["offending_pairs"]),
        ])
    return table


def _cmd_embed(args) -> dict:
    e = _esch_from_args(args)
    cert = _cert_dict(embedding.make_certificate(e, args.c))
    return {
        "input": {"esch": _esch_dict(e), "shift": args.c},
        "results": [cert],
        "text": _cert_lines(cert),
        "csv": _certs_csv([cert]),
    }


def _cmd_window(args) -> dict:
    e = _esch_from_args(args)
    report = embedding.window_scan(e)
    certs = [_cert_dict(c) for c in report.certificates]
    result = {
        "esch": _esch_dict(report.esch),
        "window": _window_dict(report.window),
        "any_nonsingular": report.any_nonsingular,
        "certificates": certs,
    }
    text = [
        f"normal form: {_fmt_esch(result['esch'])}",
        f"window: {_fmt_window(result['window'])}",
    ]
    for c in certs:
        mark = "non-singular" if c["baz_free"] else "singular"
        extra = f"  |H6|={c['h6']}" if c["baz_free"] else f"  {_fmt_offenses(c['offending_pairs'][:1])}"
        text.append(f"  c={c['shift']:<4} q={_fmt_triple(c['baz']['q']):<40} {mark}{extra}")
    text.append(f"any non-singular: {_yn(report.any_nonsingular)}")
    for note in report.notes:
        text.append(f"note: {note}")
    return {
        "input": {"esch": _esch_dict(e)},
        "results": [result],
        "notes": list(report.notes),
        "text": text,
        "csv": _certs_csv(certs),
    }


def _cmd_certified_shifts(args) -> dict:
    e = _esch_from_args(args)
    kwargs = _factor_kwargs(args)
    results = []
    text = [_fmt_esch(_esch_dict(e))]
    for mu in range(1, args.mu_max + 1):
        for sign in (1, -1):
            c = embedding.certified_shift(e, mu, sign, **kwargs)
            ok = embedding.nonsingular_shift(e, c)
            results.append({"mu": mu, "sign": sign, "c": c, "nonsingular": ok})
            text.append(f"  mu={mu} sign={'+' if sign > 0 else '-'}  c = {c}  non-singular: {_yn(ok)}")
    table = [["mu", "sign", "c", "nonsingular"]]
    table.extend([r["mu"], r["sign"], r["c"], r["nonsingular"]] for r in results)
    return {"input": {"esch": _esch_dict(e), "mu_max": args.mu_max},
            "results": results, "text": text, "csv": table}


def _cmd_distinct(args) -> dict:
    e = _esch_from_args(args)
    certs = [
        _cert_dict(c)
        for c in embedding.homotopy_distinct_embeddings(e, args.n, **_factor_kwargs(args))
    ]
    text = []
    for c in certs:
        text.extend(_cert_lines(c))
    return {"input": {"esch": _esch_dict(e), "n": args.n},
            "results": certs, "text": text, "csv": _certs_csv(certs)}


def _cmd_submanifolds(args) -> dict:
    q = _baz_from_args(args)
    entries = bazaikin.submanifolds(q)
    results = []
    text = [f"q = {_fmt_triple(q.q)}"]
    for pair, e in entries:
        item = {
            "pair": list(pair),
            "esch": _esch_dict(e),
            "h4": eschenburg.h4_order(e),
            "free": eschenburg.is_free(e),
        }
        results.append(item)
        text.append(
            f"  {{{pair[0]},{pair[1]}}}: {_fmt_esch(item['esch'])}  "
            f"|H4|={item['h4']}  free: {_yn(item['free'])}"
        )
    distinct = len({eschenburg.canonicalize(e) for _, e in entries})
    text.append(f"distinct up to isometry moves: {distinct}")
    table = [["pair", "a", "b", "h4", "free"]]
    table.extend(
        [f"{{{r['pair'][0]},{r['pair'][1]}}}", _fmt_triple(r["esch"]["a"]),
         _fmt_triple(r["esch"]["b"]), r["h4"], r["free"]]
        for r in results
    )
    return {"input": {"baz": _baz_dict(q)}, "results": results,
            "summary": {"distinct_count": distinct}, "text": text, "csv": table}


def _cmd_dual(args) -> dict:
    e = _esch_from_args(args)
    q = embedding.candidate_q(e, args.c)
    dual_esch, dual_baz = embedding.dual_embedding(e, args.c)
    result = {
        "original": {"esch": _esch_dict(e), "shift": args.c, "baz": _baz_dict(q),
                     "h6": bazaikin.h6_order(q)},
        "dual": {"esch": _esch_dict(dual_esch), "baz": _baz_dict(dual_baz),
                 "h6": bazaikin.h6_order(dual_baz)},
    }
    text = [
        f"original: {_fmt_esch(result['original']['esch'])}  shift c={args.c}",
        f"  q = {_fmt_triple(q.q)}  |H6|={result['original']['h6']}",
        f"dual:     {_fmt_esch(result['dual']['esch'])}",
        f"  q = {_fmt_triple(dual_baz.q)}  |H6|={result['dual']['h6']}",
    ]
    table = [
        ["role", "a", "b", "q", "h6"],
        ["original", _fmt_triple(e.a), _fmt_triple(e.b), _fmt_triple(q.q),
         result["original"]["h6"]],
        ["dual", _fmt_triple(dual_esch.a), _fmt_triple(dual_esch.b),
         _fmt_triple(dual_baz.q), result["dual"]["h6"]],
    ]
    return {"input": {"esch": _esch_dict(e), "shift": args.c},
            "results": [result], "text": text, "csv": table}


def _counterexample_csv(rows: list[SurveyRow]) -> list[list]:
    table = [["a", "b", "q_formula", "window"]]
    for row in rows:
        table.append([
            _fmt_triple(row.esch.a), _fmt_triple(row.esch.b),
            _q_formula(row.esch), _fmt_window(_window_dict(row.window)),
        ])
    return table


def _cmd_counterexamples(args) -> dict:
    rows = survey.verify_known_counterexamples()
    results = []
    text = []
    for row in rows:
        d = _row_dict(row)
        d["q_formula"] = _q_formula(row.esch)
        results.append(d)
        text.append(_row_line(d))
    text.append(f"all {len(rows)} stored counterexamples verified")
    return {"input": {}, "results": results, "text": text, "csv": _counterexample_csv(rows)}


def _cmd_families(args) -> dict:
    rows = survey.verify_infinite_families(args.k_max)
    per_variant = args.k_max + 1
    results = []
    text = []
    for i, row in enumerate(rows):
        d = _row_dict(row)
        d["variant"] = "A" if i < per_variant else "B"
        d["k"] = i % per_variant
        results.append(d)
        text.append(f"{d['variant']} k={d['k']:<4} {_row_line(d)}")
    text.append(f"both families verified as counterexamples for 0 <= k <= {args.k_max}")
    table = [["variant", "k", "a", "b", "window", "counterexample"]]
    table.extend(
        [d["variant"], d["k"], _fmt_triple(d["esch"]["a"]), _fmt_triple(d["esch"]["b"]),
         _fmt_window(d["window"]), d["is_counterexample"]]
        for d in results
    )
    return {"input": {"k_max": args.k_max}, "results": results, "text": text, "csv": table}


def _cmd_cohom1(args) -> dict:
    summary = survey.verify_cohomogeneity_one(args.p_max)
    certs = [_cert_dict(c) for c in summary.certificates]
    for p, cert in enumerate(certs, start=1):
        cert["p"] = p
    text = [
        f"p={c['p']:<4} q={_fmt_triple(c['baz']['q']):<24} "
        f"non-singular: {_yn(c['baz_free'])}  pc: {_yn(c['baz_pc'])}"
        for c in certs
    ]
    text.append(f"all {summary.p_max} members verified at shift c=-1")
    for note in summary.notes:
        text.append(f"note: {note}")
    table = [["p", "q", "baz_free", "baz_pc"]]
    table.extend([c["p"], _fmt_triple(c["baz"]["q"]), c["baz_free"], c["baz_pc"]] for c in certs)
    return {"input": {"p_max": args.p_max}, "results": certs,
            "summary": {"checked": summary.p_max}, "notes": list(summary.notes),
            "text": text, "csv": table}


def _cmd_scan(args) -> dict:
    stats, rows = survey.scan_box(args.max_abs, args.limit, workers=args.workers)
    results = [_row_dict(row) for row in rows]
    text = [
        f"box |entries| <= {args.max_abs}: "
        f"{stats.total} spaces, {stats.embeddable} embeddable, "
        f"{stats.counterexamples} counterexamples",
    ]
    text.extend(_row_line(d) for d in results)
    if stats.counterexamples > len(rows):
        text.append(f"({stats.counterexamples - len(rows)} more beyond --limit {args.limit})")
    table = [["a", "b", "window", "h4"]]
    table.extend(
        [_fmt_triple(d["esch"]["a"]), _fmt_triple(d["esch"]["b"]),
         _fmt_window(d["window"]), d["h4"]]
        for d in results
    )
    return {"input": {"max_abs": args.max_abs, "limit": args.limit, "workers": args.workers},
            "results": results,
            "summary": {"stats": {"total": stats.total, "embeddable": stats.embeddable,
                                  "counterexamples": stats.counterexamples}},
            "text": text, "csv": table}


# ---------------------------------------------------------------------------
# emission


def _to_jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x if -_JSON_SAFE <= x <= _JSON_SAFE else str(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {k: _to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x)!r}")


def _emit(fmt: str, command: str, outcome: dict, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        report = {
            "command": command,
            "version": __version__,
            "input": outcome.get("input", {}),
            "results": outcome.get("results", []),
            "discrepancy_notes": outcome.get("notes", []),
        }
        if "summary" in outcome:
            report["summary"] = outcome["summary"]
        json.dump(_to_jsonable(report), out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        for row in outcome["csv"]:
            writer.writerow(["" if v is None else v for v in row])
    else:
        for line in outcome["text"]:
            out.write(line + "\n")


def _emit_error(fmt: str, command: str, kind: str, reason: str, out=None, err=None) -> None:
    if fmt == "json":
        report = {
            "command": command,
            "version": __version__,
            "error": {"kind": kind, "reason": reason},
        }
        json.dump(_to_jsonable(report), out or sys.stdout, indent=2)
        (out or sys.stdout).write("\n")
    else:
        print(f"error ({kind}): {reason}", file=err or sys.stderr)


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default: text)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized internals (factor splitting)")
    common.add_argument("--factor-bound", type=int, default=None,
                        help="trial-division bound for factorizations")

    parser = argparse.ArgumentParser(
        prog="eschbaz",
        description="Exact-integer verification and search for totally geodesic "
                    "embeddings of Eschenburg spaces into Bazaikin spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, **arguments):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, opts in arguments.items():
            p.add_argument(flag, **opts)
        p.set_defaults(handler=handler)
        return p

    add("verify-esch", _cmd_verify_esch,
        "freeness, curvature, |H4|, kernel order, canonical form",
        **{"--a": dict(required=True, help="a1,a2,a3"),
           "--b": dict(required=True, help="b1,b2,b3")})
    add("verify-baz", _cmd_verify_baz,
        "freeness (with offending gcd pairs), curvature, |H6|",
        **{"--q": dict(required=True, help="q1,q2,q3,q4,q5")})
    add("embed", _cmd_embed, "one embedding certificate at a given shift",
        **{"--a": dict(required=True), "--b": dict(required=True),
           "--c": dict(required=True, type=int, help="shift")})
    add("window", _cmd_window, "scan the whole positive-curvature shift window",
        **{"--a": dict(required=True), "--b": dict(required=True)})
    add("certified-shifts", _cmd_certified_shifts,
        "shifts of the form +-2^(mu-1) P^mu, guaranteed non-singular",
        **{"--a": dict(required=True), "--b": dict(required=True),
           "--mu-max": dict(required=True, type=int)})
    add("distinct", _cmd_distinct,
        "non-singular hosts with pairwise distinct |H6|",
        **{"--a": dict(required=True), "--b": dict(required=True),
           "--n": dict(required=True, type=int)})
    add("submanifolds", _cmd_submanifolds,
        "the ten embedded Eschenburg parameter sets of a 5-tuple",
        **{"--q": dict(required=True)})
    add("dual", _cmd_dual, "swapped space and its host at a non-singular shift",
        **{"--a": dict(required=True), "--b": dict(required=True),
           "--c": dict(required=True, type=int)})
    add("counterexamples", _cmd_counterexamples,
        "re-verify the nine stored counterexample spaces")
    add("families", _cmd_families,
        "verify the two infinite counterexample families",
        **{"--k-max": dict(required=True, type=int)})
    add("cohom1", _cmd_cohom1,
        "verify the cohomogeneity-one family at shift -1",
        **{"--p-max": dict(required=True, type=int)})
    add("scan", _cmd_scan, "survey a parameter box for counterexamples",
        **{"--max-abs": dict(required=True, type=int),
           "--limit": dict(required=True, type=int),
           "--workers": dict(type=int, default=1)})
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, emit a report, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID_INPUT
    fmt, command = args.format, args.command
    try:
        outcome = args.handler(args)
    except VerificationFailure as exc:
        _emit_error(fmt, command, "verification-failed", str(exc))
        return EXIT_VERIFICATION_FAILED
    except FactorizationIncomplete as exc:
        _emit_error(fmt, command, "effort-exceeded", str(exc))
        return EXIT_EFFORT_EXCEEDED
    except ValueError as exc:
        _emit_error(fmt, command, "invalid-input", str(exc))
        return EXIT_INVALID_INPUT
    _emit(fmt, command, outcome)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
