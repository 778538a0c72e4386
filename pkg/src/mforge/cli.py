"""Command-line entry point: ``mforge <command> ...``.

Exit codes: 0 success, 1 usage error, 2 verification failure or I/O error,
3 resource guard tripped.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from pathlib import Path

from . import __version__

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_GUARD = 0, 1, 2, 3

CONFIG_KEYS = {"threads": int, "max_enumeration": int, "data_dir": str, "format": str}
DEFAULTS = {"threads": 1, "max_enumeration": 10**7, "data_dir": None, "format": "json"}


class UsageError(Exception):
    pass


def read_config(path) -> dict:
    """Plain ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    return out


def resolve_settings(args) -> dict:
    settings = dict(DEFAULTS)
    if getattr(args, "config", None):
        settings.update(read_config(args.config))
    for key in CONFIG_KEYS:
        val = getattr(args, key, None)
        if val is not None:
            settings[key] = val
    if settings["threads"] < 1:
        raise UsageError("threads must be >= 1")
    if settings["format"] not in ("json", "csv"):
        raise UsageError("format must be json or csv")
    return settings


# -- reports --------------------------------------------------------------------------------

def make_report(command: str, config: dict, payload) -> dict:
    return {"version": __version__, "config": {"command": command, **config}, "payload": payload}


def _csv_rows(report: dict) -> tuple[list[str], list[list]]:
    payload = report["payload"]
    command = report["config"]["command"]
    if command == "ledger":
        header = ["id", "value", "claimed", "claim", "verdict", "exact", "note"]
        return header, [[e["id"], _cell(e["value"]), _cell(e["claimed"]), e["claim"], e["verdict"],
                         e["exact"], e["note"]] for e in payload["entries"]]
    if command in ("search", "reproduce-theorem"):
        header = ["group", "type", "genus", "classes", "witnesses", "verdict"]
        rows = [[r["group"], _cell(r["type"]), r["genus"],
                 " ".join(c["name"] for c in r["ramification"]["classes"]), r["witnesses"],
                 "verified" if all(r["flags"].values()) else "unverified"] for r in payload["records"]]
        if command == "reproduce-theorem":
            rows += [[s["group"], _cell(s["type"]), _cell(s["genera"]), " ".join(s["classes"]), "",
                      "obstructed" if s["obstructed"] else "rh-pass"] for s in payload["screens"]]
        return header, rows
    if command == "screen":
        header = ["group", "type", "genus", "classes", "orbits", "verdict"]
        return header, [[s["group"], _cell(s["type"]), _cell(s["genera"]), " ".join(s["classes"]),
                         _cell(s["orbits"]), "obstructed" if s["obstructed"] else "rh-pass"]
                        for s in payload["records"]]
    if command == "atlas":
        header = ["label", "check", "ok", "detail"]
        return header, [[g["label"], name, ok, detail] for g in payload["groups"]
                        for name, ok, detail in g["checks"]]
    raise ValueError(f"no CSV layout for {command}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def render_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    header, rows = _csv_rows(report)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def emit_report(report: dict, fmt: str = "json", path=None) -> str:
    text = render_report(report, fmt)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


# -- commands -------------------------------------------------------------------------------

def _parse_type(text: str) -> tuple[int, ...]:
    try:
        t = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad type {text!r}; expected e.g. 2,3,8") from None
    return t


def _parse_genus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad genus list {text!r}") from None


def _label_ok(label: str) -> None:
    from .atlas import CATALOG, EXTRA
    if label not in CATALOG and label not in EXTRA:
        raise UsageError(f"unknown group label {label!r}; choose from {', '.join(CATALOG)}")


def cmd_atlas(args, settings) -> tuple[int, dict]:
    from .atlas import CATALOG, get_entry, verify_atlas
    if args.action != "verify":
        raise UsageError("only 'atlas verify' is supported")
    if args.all == bool(args.label):
        raise UsageError("give exactly one of --label or --all")
    labels = list(CATALOG) if args.all else [args.label]
    for lab in labels:
        _label_ok(lab)
    groups = []
    for lab in labels:
        res = verify_atlas(get_entry(lab))
        res["checks"] = [list(c) for c in res["checks"]]
        groups.append(res)
    code = EXIT_OK if all(g["ok"] for g in groups) else EXIT_FAIL
    return code, make_report("atlas", {"labels": labels}, {"groups": groups})


def cmd_search(args, settings) -> tuple[int, dict]:
    from .search import SearchConfig, search_systems
    _label_ok(args.socle)
    try:
        config = SearchConfig(args.socle, tuple(_parse_type(t) for t in args.type), _parse_genus(args.genus),
                              args.groups, threads=settings["threads"],
                              allow_excluded=args.allow_excluded, max_enumeration=settings["max_enumeration"])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        records = search_systems(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"records": [r.as_dict() for r in records],
               "ramification_types": len({(r.group, r.ramification.key) for r in records})}
    code = EXIT_OK if all(all(r.flags.values()) for r in records) else EXIT_FAIL
    return code, make_report("search", config.as_dict(), payload)


def cmd_screen(args, settings) -> tuple[int, dict]:
    from .search import SearchConfig, screen_class_triples, triangle_types
    from .socle import catalog_type_b
    _label_ok(args.socle)
    if args.types == "prop32":
        orders = sorted({o for G in catalog_type_b(args.socle) for o in G.element_orders})
        types = triangle_types(args.socle == "a5", orders)
    else:
        types = [_parse_type(t) for t in args.types.split(";") if t.strip()]
    if args.genus_max < 0:
        raise UsageError("--genus-max must be >= 0")
    try:
        config = SearchConfig(args.socle, tuple(types), tuple(range(args.genus_max + 1)), args.groups,
                              strategy="screen", allow_excluded=True)
        records = screen_class_triples(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"records": [r.as_dict() for r in records],
               "unobstructed": sum(not r.obstructed for r in records)}
    return EXIT_OK, make_report("screen", config.as_dict(), payload)


def cmd_ledger(args, settings) -> tuple[int, dict]:
    from . import ledger
    if args.all == bool(args.case):
        raise UsageError("give exactly one of --case or --all")
    if args.all:
        entries = ledger.all_entries()
    else:
        try:
            entries = ledger.eval_case(args.case)
        except KeyError:
            raise UsageError(f"unknown ledger case {args.case!r}; known: {', '.join(ledger.case_ids())}") from None
    failures = ledger.hard_failures(entries)
    payload = {"entries": [e.as_dict() for e in entries],
               "failures": [e.id for e in failures],
               "discrepancies": [e.id for e in entries if e.verdict == ledger.DISCREPANCY]}
    return (EXIT_FAIL if failures else EXIT_OK), make_report("ledger", {"case": args.case or "all"}, payload)


def cmd_reproduce(args, settings) -> tuple[int, dict]:
    from .search import theorem_outcome, theorem_sweep
    result = theorem_sweep(threads=settings["threads"])
    problems = theorem_outcome(result)
    payload = result.as_dict()
    payload["problems"] = problems
    payload["reproduced"] = not problems
    config = {"genus": [0, 1], "screen_genus": list(range(6))}
    return (EXIT_FAIL if problems else EXIT_OK), make_report("reproduce-theorem", config, payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value settings file")
    common.add_argument("--threads", type=int)
    common.add_argument("--max-enumeration", dest="max_enumeration", type=int)
    common.add_argument("--data-dir", dest="data_dir")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    p = argparse.ArgumentParser(prog="mforge", description="Genus systems of diagonal-type groups.")
    p.add_argument("--version", action="version", version=f"mforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("atlas", parents=[common], help="verify catalog groups")
    a.add_argument("action", choices=("verify",))
    a.add_argument("--label")
    a.add_argument("--all", action="store_true")

    s = sub.add_parser("search", parents=[common], help="exact genus-system search")
    s.add_argument("--socle", required=True)
    s.add_argument("--type", action="append", required=True, help="comma list, repeatable")
    s.add_argument("--genus", default="0,1")
    s.add_argument("--groups", default="all")
    s.add_argument("--allow-excluded", action="store_true")

    sc = sub.add_parser("screen", parents=[common], help="class-level Riemann-Hurwitz screen")
    sc.add_argument("--socle", required=True)
    sc.add_argument("--types", default="prop32", help="'prop32' or e.g. '2,3,7;2,3,8'")
    sc.add_argument("--genus-max", dest="genus_max", type=int, default=5)
    sc.add_argument("--groups", default="all")

    led = sub.add_parser("ledger", parents=[common], help="exact inequality ledger")
    led.add_argument("--case")
    led.add_argument("--all", action="store_true")

    sub.add_parser("reproduce-theorem", parents=[common], help="run the full sweep and check the outcome")
    return p


COMMANDS = {"atlas": cmd_atlas, "search": cmd_search, "screen": cmd_screen, "ledger": cmd_ledger,
            "reproduce-theorem": cmd_reproduce}


def main(argv=None) -> int:
    from .search import SearchGuardError
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        settings = resolve_settings(args)
        if settings["data_dir"]:
            os.environ["MFORGE_DATA_DIR"] = settings["data_dir"]
        t0 = time.perf_counter()
        code, report = COMMANDS[args.command](args, settings)
        if args.timing:
            report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
        emit_report(report, settings["format"], args.out)
        return code
    except UsageError as exc:
        print(f"mforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchGuardError as exc:
        print(f"mforge: guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"mforge: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
