"""Command-line front end and JSON-lines corpus runner.

Exit codes: 0 success/verified, 1 verification failure, 2 usage or parse
error, 3 chain not stabilized within the cap.  All JSON output is
key-sorted and list-sorted, so identical invocations are byte-identical;
wall-clock timings are emitted only on request (`corpus --timings`).
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .core import (
    MAX_INPUT_EXPONENT,
    MonomialIdeal,
    RingContext,
    normalize,
)
from .errors import InvalidInput, NotStabilized, ParseError
from .newton import compute_np, integral_closure_power
from .parser import parse_ideal, parse_monomial, parse_ring, render_ideal
from .primes import MonomialPrime, minimal_primes
from .sampling import sample_box
from .valuations import b_star, rees_valuations
from .verify import (
    DEFAULT_CHAIN_CAP,
    DEFAULT_LOCALIZATION_CAP,
    a_star,
    closure_oracle_discrepancies,
    verify_centers_match,
    verify_localization,
)

ORACLE_SAMPLE_CAP = 500
ORACLE_DILATIONS = (1, 2, 3)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _dump_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _primes_json(primes, ring: RingContext) -> list[list[str]]:
    return [list(p.names(ring)) for p in sorted(primes, key=MonomialPrime.sort_key)]


def _primes_text(primes, ring: RingContext) -> str:
    return ", ".join(
        "(" + ",".join(p.names(ring)) + ")"
        for p in sorted(primes, key=MonomialPrime.sort_key)
    )


def _linear_form(normal, ring: RingContext) -> str:
    parts = []
    for a, name in zip(normal, ring.variable_names):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{a}*{name}")
    return " + ".join(parts)


def _require_ideal(args) -> MonomialIdeal:
    if not args.ring or not args.ideal:
        raise InvalidInput("--ring and --ideal are required")
    return parse_ideal(args.ideal, parse_ring(args.ring))


def _cmd_np(args) -> int:
    I = _require_ideal(args)
    np_ = compute_np(I)
    if args.json:
        print(_dump({
            "facets": [[list(f.normal), f.offset] for f in np_.facets],
            "gens": [list(g) for g in I.min_gens],
            "ring": list(I.ring.variable_names),
        }))
    else:
        for f in np_.facets:
            print(f"{_linear_form(f.normal, I.ring)} >= {f.offset}")
    return 0


def _cmd_closure(args) -> int:
    I = _require_ideal(args)
    closure = integral_closure_power(I, args.power)
    if args.json:
        print(_dump({
            "closure": [list(g) for g in closure.min_gens],
            "gens": [list(g) for g in I.min_gens],
            "power": args.power,
            "ring": list(I.ring.variable_names),
        }))
    else:
        print(render_ideal(closure))
    return 0


def _cmd_rees(args) -> int:
    I = _require_ideal(args)
    valuations = rees_valuations(I)
    centers = b_star(I).centers
    if args.json:
        print(_dump({
            "centers": _primes_json(centers, I.ring),
            "ring": list(I.ring.variable_names),
            "valuations": [[list(v.normal), v.ideal_value] for v in valuations],
        }))
    else:
        from .valuations import center as center_of

        for v in valuations:
            names = ",".join(center_of(v).names(I.ring))
            print(
                f"normal=({','.join(str(a) for a in v.normal)}) "
                f"value={v.ideal_value} center=({names})"
            )
        print(f"b_star: {_primes_text(centers, I.ring)}")
    return 0


def _cmd_vbar(args) -> int:
    from .newton import vbar

    I = _require_ideal(args)
    m = parse_monomial(args.monomial, I.ring)
    v = vbar(I, m)
    if args.json:
        print(_dump({
            "monomial": list(m),
            "ring": list(I.ring.variable_names),
            "vbar": str(v),
        }))
    else:
        print(v)
    return 0


def _astar_json(report, ring: RingContext) -> dict:
    return {
        "b_star": _primes_json(report.b_star.centers, ring),
        "chain": [[n, _primes_json(ass, ring)] for n, ass in report.chain],
        "stabilization_index": report.stabilization_index,
        "stable_set": _primes_json(report.stable_set, ring),
        "verdicts": {
            "cor26": report.verdict_cor26,
            "monotone": report.verdict_monotone,
        },
    }


def _cmd_astar(args) -> int:
    I = _require_ideal(args)
    report = a_star(I, args.cap if args.cap else DEFAULT_CHAIN_CAP)
    if args.json:
        print(_dump(_astar_json(report, I.ring)))
    else:
        for n, ass in report.chain:
            print(f"n={n}: {_primes_text(ass, I.ring)}")
        print(f"stable_set: {_primes_text(report.stable_set, I.ring)}")
        print(f"stabilization_index: {report.stabilization_index}")
        print(f"b_star: {_primes_text(report.b_star.centers, I.ring)}")
    return 0


def _parse_s_vars(text: str, ring: RingContext) -> tuple[int, ...]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    if not names:
        raise InvalidInput("--s-vars needs at least one variable name")
    return tuple(ring.index_of(name) for name in names)


def _localization_json(report, ring: RingContext) -> dict:
    return {
        "admissible": report.admissible,
        "counter_witness": report.counter_witness(),
        "holds": report.holds(),
        "per_n": [[n, ok] for n, ok in report.per_n],
        "s_vars": [ring.variable_names[i] for i in report.s_vars],
    }


def _cmd_verify(args) -> int:
    I = _require_ideal(args)
    chain_cap = args.cap if args.cap else DEFAULT_CHAIN_CAP
    loc_cap = args.cap if args.cap else DEFAULT_LOCALIZATION_CAP
    failed = False
    payload: dict = {}

    if args.check in ("cor26", "all"):
        ok, report = verify_centers_match(I, chain_cap)
        min_primes_ok = minimal_primes(I) <= report.stable_set
        cor_json = _astar_json(report, I.ring)
        cor_json["verdicts"]["lemma21i"] = min_primes_ok
        payload["cor26"] = cor_json
        failed = failed or not (ok and report.verdict_monotone and min_primes_ok)
        if not args.json:
            print(f"cor26: {'PASS' if ok else 'FAIL'} "
                  f"(stable set {_primes_text(report.stable_set, I.ring)}; "
                  f"index {report.stabilization_index})")
            print(f"monotone: {'PASS' if report.verdict_monotone else 'FAIL'}")
            print(f"lemma21i: {'PASS' if min_primes_ok else 'FAIL'}")

    if args.check in ("thm31", "all"):
        if args.s_vars is None:
            if args.check == "thm31":
                raise InvalidInput("verify thm31 needs --s-vars")
        else:
            s_vars = _parse_s_vars(args.s_vars, I.ring)
            report = verify_localization(I, s_vars, loc_cap)
            payload["thm31"] = _localization_json(report, I.ring)
            failed = failed or (report.admissible and not report.holds())
            if not args.json:
                status = "PASS" if report.holds() else "FAIL"
                if report.admissible:
                    print(f"thm31: {status} (S admissible, n=1..{loc_cap})")
                else:
                    witness = report.counter_witness()
                    note = f"counter-witness n={witness}" if witness else "no counter-witness found"
                    print(f"thm31: S meets a center (inadmissible); {note}")

    if args.json:
        print(_dump(payload if args.check == "all" else payload[args.check]))
    return 1 if failed else 0


def _load_corpus_entry(line_no: int, line: str) -> dict:
    def fail(msg: str) -> None:
        raise InvalidInput(f"line {line_no}: {msg}")

    try:
        entry = json.loads(line)
    except json.JSONDecodeError as exc:
        fail(f"invalid JSON ({exc.msg})")
    if not isinstance(entry, dict):
        fail("entry must be a JSON object")
    unknown = set(entry) - {"id", "ring", "gens", "s_vars"}
    if unknown:
        fail(f"unknown fields {sorted(unknown)}")
    if not isinstance(entry.get("id"), str) or not entry["id"]:
        fail("'id' must be a non-empty string")
    ring = entry.get("ring")
    if not isinstance(ring, list) or not all(isinstance(v, str) for v in ring):
        fail("'ring' must be a list of variable names")
    gens = entry.get("gens")
    if not isinstance(gens, list) or not gens:
        fail("'gens' must be a non-empty list of exponent vectors")
    for g in gens:
        if (
            not isinstance(g, list)
            or len(g) != len(ring)
            or any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in g)
        ):
            fail(f"generator {g} must be a list of {len(ring)} non-negative ints")
        if not any(g):
            fail("generators must be non-constant (proper ideal)")
        if any(e > MAX_INPUT_EXPONENT for e in g):
            fail(f"generator {g} exceeds the exponent cap {MAX_INPUT_EXPONENT}")
    s_vars = entry.get("s_vars")
    if s_vars is not None:
        if (
            not isinstance(s_vars, list)
            or not s_vars
            or len(set(s_vars)) != len(s_vars)
            or any(v not in ring for v in s_vars)
        ):
            fail("'s_vars' must be a non-empty list of distinct ring variables")
    try:
        RingContext(tuple(ring))
    except InvalidInput as exc:
        fail(str(exc))
    return entry


def corpus_entry_report(entry: dict, seed: int, n_cap: int, timings: bool) -> dict:
    """Verdicts for one corpus entry; order-independent and deterministic."""
    started = time.perf_counter()
    ring = RingContext(tuple(entry["ring"]))
    I = normalize([tuple(g) for g in entry["gens"]], ring)
    report: dict = {"id": entry["id"]}
    try:
        ok, chain_report = verify_centers_match(I, n_cap)
    except NotStabilized as exc:
        report["error"] = "not_stabilized"
        report["n_cap"] = exc.n_cap
        return report
    min_primes_ok = minimal_primes(I) <= chain_report.stable_set
    samples = sample_box(I.max_exponents(), ORACLE_SAMPLE_CAP, f"{seed}:{entry['id']}")
    discrepancies = closure_oracle_discrepancies(I, samples, ORACLE_DILATIONS)
    verdicts = {
        "cor26": ok,
        "lemma21i": min_primes_ok,
        "monotone": chain_report.verdict_monotone,
        "oracle": not discrepancies,
    }
    report.update(
        b_star=_primes_json(chain_report.b_star.centers, ring),
        stable_set=_primes_json(chain_report.stable_set, ring),
        stabilization_index=chain_report.stabilization_index,
    )
    if entry.get("s_vars"):
        s_idx = tuple(ring.index_of(name) for name in entry["s_vars"])
        loc = verify_localization(I, s_idx, DEFAULT_LOCALIZATION_CAP)
        verdicts["thm31"] = loc.holds()
        report["thm31_admissible"] = loc.admissible
        report["thm31_counter_witness"] = loc.counter_witness()
    report["verdicts"] = verdicts
    if timings:
        report["timings_ms"] = {
            "total": round((time.perf_counter() - started) * 1000.0, 3)
        }
    return report


def run_corpus(
    path: str,
    seed: int = 0,
    n_cap: int = DEFAULT_CHAIN_CAP,
    jobs: int = 1,
    timings: bool = False,
    out=None,
) -> int:
    """Verify every corpus entry; JSONL report per entry plus a summary line."""
    out = out or sys.stdout
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        print(f"cannot read corpus: {exc}", file=sys.stderr)
        return 2
    entries = []
    seen_ids = set()
    for line_no, line in enumerate(raw_lines, start=1):
        if not line.strip():
            continue
        entry = _load_corpus_entry(line_no, line)
        if entry["id"] in seen_ids:
            raise InvalidInput(f"line {line_no}: duplicate id {entry['id']!r}")
        seen_ids.add(entry["id"])
        entries.append(entry)

    worker = functools.partial(
        corpus_entry_report, seed=seed, n_cap=n_cap, timings=timings
    )
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(worker, entries))
    else:
        reports = [worker(entry) for entry in entries]

    failed_ids, not_stabilized_ids = [], []
    max_index = None
    for report in reports:
        print(_dump_line(report), file=out)
        if report.get("error") == "not_stabilized":
            not_stabilized_ids.append(report["id"])
            continue
        if not all(report["verdicts"].values()):
            failed_ids.append(report["id"])
        idx = report["stabilization_index"]
        max_index = idx if max_index is None else max(max_index, idx)
    summary = {
        "summary": {
            "all_passed": not failed_ids and not not_stabilized_ids,
            "entries": len(reports),
            "failed_ids": failed_ids,
            "max_stabilization_index": max_index,
            "not_stabilized_ids": not_stabilized_ids,
        }
    }
    print(_dump_line(summary), file=out)
    if not_stabilized_ids:
        return 3
    return 1 if failed_ids else 0


def _cmd_corpus(args) -> int:
    return run_corpus(
        args.path,
        seed=args.seed,
        n_cap=args.cap if args.cap else DEFAULT_CHAIN_CAP,
        jobs=args.jobs,
        timings=args.timings,
    )


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help='ring text, e.g. "Q[x,y]"')
    common.add_argument("--ideal", help='ideal text, e.g. "x^2, x*y"')
    common.add_argument("--json", action="store_true", help="emit key-sorted JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    parser = argparse.ArgumentParser(
        prog="reesval",
        description="Rees valuations, integral closures of powers, and "
        "asymptotic associated primes of monomial ideals, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("np", parents=[common], help="facets of the Newton polyhedron")
    p.set_defaults(func=_cmd_np)

    p = sub.add_parser("closure", parents=[common], help="integral closure of a power")
    p.add_argument("--power", type=int, default=1, help="which power to close (default 1)")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("rees", parents=[common], help="Rees valuations and centers (B*)")
    p.set_defaults(func=_cmd_rees)

    p = sub.add_parser("vbar", parents=[common], help="asymptotic order of a monomial")
    p.add_argument("--monomial", required=True, help='monomial text, e.g. "x*y"')
    p.set_defaults(func=_cmd_vbar)

    p = sub.add_parser("astar", parents=[common], help="associated-prime chain and A*")
    p.add_argument("--cap", type=int, default=None, help="chain cap (default 8)")
    p.set_defaults(func=_cmd_astar)

    p = sub.add_parser("verify", parents=[common], help="run the identity and localization checks")
    p.add_argument("check", choices=["cor26", "thm31", "all"])
    p.add_argument("--cap", type=int, default=None,
                   help="chain cap for cor26 (default 8) / power cap for thm31 (default 4)")
    p.add_argument("--s-vars", default=None,
                   help="comma-separated variable names generating S (thm31)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="verify a JSON-lines corpus")
    p.add_argument("path", help="corpus file, one entry per line")
    p.add_argument("--cap", type=int, default=None, help="chain cap (default 8)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--timings", action="store_true",
                   help="include per-entry wall-clock timings (not byte-stable)")
    p.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except NotStabilized as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, InvalidInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
