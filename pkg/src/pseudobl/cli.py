"""Command-line front end.  Every subcommand prints a JSON report.

Exit status: 0 when every check passes, 1 when some check fails (the report
carries a witness), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .computable import (
    check_maxfilter_normality,
    negation_mismatch,
    noncommutativity_witness,
    pmv_checks_sampled,
    pmv_properties_sampled,
    preset,
    sample_elements,
    sample_tuples,
)
from .constructions import gamma
from .core import FiniteAlgebra, detect_profile, dumps, load_algebra, satisfies, validate_axioms
from .errors import AlgebraError
from .filters import (
    Filter,
    all_filters,
    all_filters_raw,
    classify_filter,
    in_mnp,
    is_filter,
    is_normal_valued,
    maximal_filters,
    strong_units,
)
from .groups import (
    GROUPS,
    IntegerGroup,
    LexProduct,
    UnitalGroup,
    default_unit,
    group_by_name,
    parse_element,
)
from .quotients import equivalences_from_filter, filter_from_classes, quotient_map
from .schemas import Mode, UnitalContext, check_eqbase, witness_violates
from .search import (
    PROPERTIES,
    RESIDUATED,
    Incomplete,
    SearchSpec,
    brute_force_count,
    catalog,
    enumerate_models,
    find_counterexample,
)

REPORT_V = 1


class UsageError(Exception):
    pass


def check(name, ok, witness=None, **extra) -> dict:
    """One report entry; ``ok`` None means skipped."""
    status = "skip" if ok is None else "pass" if ok else "fail"
    if status == "fail" and witness is None:
        witness = {"reason": "unspecified"}
    out = {"name": name, "status": status, "witness": witness}
    out.update(extra)
    return out


def _read(path: str) -> tuple[FiniteAlgebra, str]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return load_algebra(data.decode("utf-8"), name=Path(path).stem), hashlib.sha256(data).hexdigest()


def _hash_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _parse_filter(text: str) -> frozenset:
    try:
        items = json.loads(text if text.strip().startswith("[") else f"[{text}]")
        return frozenset(int(i) for i in items)
    except (ValueError, TypeError):
        raise UsageError(f"bad filter list {text!r}") from None


def _parse_unit(A, text: str):
    if isinstance(A, FiniteAlgebra):
        try:
            u = int(text)
        except ValueError:
            raise UsageError(f"unit must be an element index, got {text!r}") from None
        if u not in A.elements:
            raise UsageError(f"unit {u} is not an element")
        return u
    G = getattr(A, "G", None)
    try:
        if G is None:
            return Fraction(text)
        return parse_element(G, text)
    except (ValueError, IndexError, ZeroDivisionError):
        raise UsageError(f"cannot parse unit {text!r}") from None


# -- subcommands -------------------------------------------------------------------------------

def cmd_validate(args):
    A, h = _read(args.file)
    checks = [c.as_dict() for c in validate_axioms(A, args.profile)]
    return h, {"file": args.file, "profile": args.profile}, checks, {
        "size": A.size, "detected_profile": getattr(detect_profile(A), "value", None)}


def cmd_filters(args):
    A, h = _read(args.file)
    fs = all_filters(A)
    checks = [check("characterizations", True)]
    if A.size <= 12:
        raw = sorted(F.mask for F in all_filters_raw(A, size_limit=12))
        ok = raw == sorted(F.mask for F in fs)
        checks.append(check("raw-recount", ok, None if ok else {"raw": len(raw), "closure": len(fs)}))
    listed = []
    for F in fs:
        entry = {"carrier": F.as_list()}
        if args.classify:
            entry["flags"] = classify_filter(A, F, fs).as_dict()
        listed.append(entry)
    results = {
        "filters": listed,
        "maximal": [F.as_list() for F in maximal_filters(A, fs)],
        "mnp": in_mnp(A),
        "normal_valued": is_normal_valued(A),
    }
    if A.bottom is not None:
        results["strong_units"] = strong_units(A)
    return h, {"file": args.file, "classify": args.classify}, checks, results


def _schema_checks(ctx, verdict) -> list:
    out = []
    for v in verdict.verdicts:
        name = f"schema-{v.schema} n={v.n}" + ("" if v.pi is None else f" pi={v.pi}")
        extra = {"schema": v.schema, "n": v.n, "pi": v.pi, "mode": v.mode.as_dict(),
                 "holds": v.holds, "checked": v.checked}
        if v.strata:
            extra["strata"] = dict(sorted(v.strata.items()))
        if not v.holds:
            extra["reevaluated"] = witness_violates(ctx, v)
        out.append(check(name, v.holds, v.witness, **extra))
    return out


def cmd_eqbase(args):
    if (args.file is None) == (args.preset is None):
        raise UsageError("give exactly one of a file or --preset")
    params = {"file": args.file, "preset": args.preset, "unit": args.unit,
              "nmax": args.nmax, "samples": args.samples, "seed": args.seed}
    if args.file is not None:
        A, h = _read(args.file)
        mode = Mode() if args.samples is None else Mode.sampled(args.samples, args.seed)
    else:
        A = preset(args.preset)
        h = _hash_text(f"preset:{args.preset}")
        mode = Mode.sampled(args.samples or 10_000, args.seed)
        if isinstance(A, FiniteAlgebra):
            mode = Mode() if args.samples is None else mode
    if args.unit is not None:
        ctx = UnitalContext.hoop(A, _parse_unit(A, args.unit))
    elif A.bottom is not None:
        ctx = UnitalContext.pbl(A)
    else:
        ctx = UnitalContext.hoop(A)
    if mode.kind == "sampled" and ctx.finite:
        raise UsageError("sampled mode is for computable presets; finite inputs are exhaustive")
    params["sampling"] = mode.as_dict()
    verdict = check_eqbase(ctx, args.nmax, mode)
    checks = _schema_checks(ctx, verdict)
    results = {"mode": ctx.kind, "unit": ctx.algebra.fmt(ctx.unit), "n_max": verdict.n_max,
               "holds": verdict.holds}
    if ctx.finite:
        direct = in_mnp(A)
        results["mnp"] = direct
        consistent = verdict.holds or not direct
        checks.append(check("oracle-consistency", consistent,
                            None if consistent else {"mnp": direct, "schemas": verdict.holds},
                            observation="schema pass up to n_max is evidence, not proof"))
    return h, params, checks, results


def cmd_quotient(args):
    A, h = _read(args.file)
    carrier = _parse_filter(args.filter)
    if not carrier <= set(A.elements) or not is_filter(A, carrier):
        raise UsageError(f"{sorted(carrier)} is not a filter")
    F = Filter(carrier)
    rep = equivalences_from_filter(A, F, strict=False)
    checks = [check("equivalence-list", rep.consistent, None if rep.consistent else {
        "left_congruence": rep.left_congruence, "right_congruence": rep.right_congruence,
        "equal": rep.equal, "normal": rep.normal})]
    q = quotient_map(A, F)
    back = filter_from_classes(A, q)
    checks.append(check("top-class", back == F, None if back == F else {"top_class": back.as_list()}))
    source = detect_profile(A)
    ok = source is None or satisfies(q.algebra, source)
    checks.append(check("profile", ok, None if ok else {"profile": source.value}))
    comments = [f"quotient of {Path(args.file).name} sha256 {h}", f"filter {F.as_list()}"]
    text = dumps(q.algebra, comments)
    if args.write:
        Path(args.write).write_text(text, encoding="utf-8")
    results = {"classes": [list(c) for c in q.classes], "algebra": text}
    return h, {"file": args.file, "filter": F.as_list()}, checks, results


def cmd_gamma(args):
    try:
        G = group_by_name(args.group)
    except KeyError:
        raise UsageError(f"unknown group {args.group!r}; known: {', '.join(GROUPS)}") from None
    try:
        u = parse_element(G, args.unit) if args.unit else default_unit(G)
    except (ValueError, IndexError):
        raise UsageError(f"cannot parse unit {args.unit!r}") from None
    params = {"group": args.group, "unit": G.fmt(u), "samples": args.samples,
              "pairs": args.pairs, "seed": args.seed}
    h = _hash_text(json.dumps(params, sort_keys=True))
    ug = UnitalGroup(G, u)
    A = gamma(ug)
    if isinstance(A, FiniteAlgebra):
        checks = [c.as_dict() for c in validate_axioms(A, "pmv")]
        return h, params, checks, {"finite": True, "size": A.size, "algebra": dumps(A)}
    lex_unit = isinstance(G, LexProduct) and isinstance(G.left, IntegerGroup) \
        and u == (1, G.right.zero)
    if lex_unit:
        A = preset(f"{args.group}-gamma") if args.group in ("zxz", "z-lex-aff") else A
    n, seed = args.samples, args.seed
    checks = [check(f"pmv-{c.name}", c.holds, c.witness, samples=n)
              for c in pmv_checks_sampled(A, n, seed)]
    checks += [check(f"pmv-{c.name}", c.holds, c.witness, samples=n)
               for c in pmv_properties_sampled(A, n, seed)]
    pairs = sample_tuples(A, args.pairs, 2, f"{seed}:pairs")
    w = noncommutativity_witness(A, pairs)
    checks.append(check("non-commutative-witness", True if w else None, w, pairs=len(pairs)))
    elems = sample_elements(A, n, f"{seed}:negations")
    mismatch = negation_mismatch(A, elems)
    checks.append(check("negations-coincide", (mismatch is None) if lex_unit else None,
                        mismatch, samples=len(elems), mismatch_found=mismatch is not None))
    if A.max_filter is not None:
        rep = check_maxfilter_normality(A, pairs)
        bad = rep.violations[:1] + rep.cross_check_disagreements[:1]
        checks.append(check("maxfilter-normality", rep.holds, bad[0] if bad else None,
                            pairs=rep.pairs, undecided=rep.cross_check_undecided))
    else:
        checks.append(check("maxfilter-normality", None, None,
                            reason="no maximal-filter predicate for this unit"))
    units = [ug.unit_witness(g) for g in elems]
    ok = all(k is not None for k in units)
    checks.append(check("strong-unit", ok, None if ok else {"x": A.fmt(elems[units.index(None)])},
                        samples=len(elems)))
    return h, params, checks, {"finite": False, "name": A.name}


def cmd_search(args):
    spec = SearchSpec(args.size, args.profile, node_budget=args.node_budget, jobs=args.jobs)
    params = {"size": args.size, "profile": spec.profile, "property": args.property,
              "node_budget": args.node_budget}
    h = _hash_text(json.dumps(params, sort_keys=True))
    if args.property:
        A = find_counterexample(spec, args.property)
        witness = None if A is None else {"size": A.size, "prod": [list(r) for r in A.prod],
                                          "top": A.top, "bottom": A.bottom, "algebra": dumps(A)}
        return h, params, [check(f"property-{args.property}", A is None, witness)], {}
    models, complete = [], True
    for A in enumerate_models(spec):
        if isinstance(A, Incomplete):
            complete = False
        else:
            models.append(A)
    checks = [check("complete", complete, None if complete else {"reason": "node budget"})]
    results = {"count": len(models),
               "models": [{"name": A.name, "digest": A.digest()} for A in models]}
    return h, params, checks, results


def cmd_catalog(args):
    params = {"max_size": args.max_size, "profile": args.profile}
    h = _hash_text(json.dumps(params, sort_keys=True))
    man = catalog(args.max_size, args.out, args.profile, jobs=args.jobs)
    checks = [check("complete", man.complete, None if man.complete else {"reason": "node budget"})]
    for m in range(1, min(args.max_size, 4) + 1):
        if args.profile in (RESIDUATED, "pmv"):
            continue
        n = brute_force_count(m, args.profile)
        ok = n == man.counts[str(m)]
        checks.append(check(f"recount-{m}", ok, None if ok else {"brute": n,
                                                                "search": man.counts[str(m)]}))
    return h, params, checks, {"counts": man.counts, "observations": man.observations,
                               "out": str(args.out)}


# -- driver ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pseudobl", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def report_opt(sp, flag="--out"):
        sp.add_argument(flag, dest="report", metavar="FILE", help="write the report here")

    s = sub.add_parser("validate", help="check the axioms of a profile")
    s.add_argument("file")
    s.add_argument("--profile", required=True, choices=["hoop", "basic", "bounded", "pbl", "pmv"])
    report_opt(s)

    s = sub.add_parser("filters", help="list and classify all filters")
    s.add_argument("file")
    s.add_argument("--classify", action="store_true")
    report_opt(s)

    s = sub.add_parser("eqbase", help="check the inequality schemas")
    s.add_argument("file", nargs="?")
    s.add_argument("--preset")
    s.add_argument("--unit", help="strong unit (element index, or group element like 1/2,0)")
    s.add_argument("--nmax", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)
    report_opt(s)

    s = sub.add_parser("quotient", help="quotient by a normal filter")
    s.add_argument("file")
    s.add_argument("--filter", required=True, help="e.g. 1,2 or [1,2]")
    s.add_argument("--write", metavar="ALG", help="also save the quotient algebra")
    report_opt(s)

    s = sub.add_parser("gamma", help="sampled checks on the interval algebra of a unital group")
    s.add_argument("--group", required=True)
    s.add_argument("--unit")
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--pairs", type=int, default=1_000)
    s.add_argument("--seed", type=int, default=0)
    report_opt(s)

    s = sub.add_parser("search", help="enumerate models or look for a counterexample")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--profile", default="pbl")
    s.add_argument("--property", choices=sorted(PROPERTIES))
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--node-budget", type=int, default=5_000_000)
    report_opt(s)

    s = sub.add_parser("catalog", help="write every model up to a size")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--out", required=True, type=Path, help="output directory")
    s.add_argument("--profile", default="pbl")
    s.add_argument("--jobs", type=int, default=1)
    report_opt(s, "--report")
    return p


COMMANDS = {
    "validate": cmd_validate,
    "filters": cmd_filters,
    "eqbase": cmd_eqbase,
    "quotient": cmd_quotient,
    "gamma": cmd_gamma,
    "search": cmd_search,
    "catalog": cmd_catalog,
}


def run(args) -> tuple[int, dict]:
    """Execute parsed arguments; returns the exit code and the report."""
    start = time.perf_counter()
    try:
        input_hash, params, checks, results = COMMANDS[args.command](args)
    except (UsageError, AlgebraError, ValueError, OSError) as exc:
        return 2, {"report_v": REPORT_V, "tool_version": __version__,
                   "command": args.command, "error": f"{type(exc).__name__}: {exc}"}
    payload = {
        "report_v": REPORT_V,
        "tool_version": __version__,
        "command": args.command,
        "input_hash": input_hash,
        "parameters": params,
        "checks": checks,
        "results": results,
    }
    # timing stays out of the hashed payload
    payload["report_hash"] = _hash_text(json.dumps(payload, sort_keys=True))
    payload["timing_ms"] = round((time.perf_counter() - start) * 1000, 1)
    code = 0 if all(c["status"] != "fail" for c in checks) else 1
    return code, payload


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, report = run(args)
    text = json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if code == 2:
        sys.stderr.write(report["error"] + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
