"""Command-line front end.

    goalselect check FILE         validate and echo the canonical knowledge base
    goalselect args FILE          arguments, claim intervals, strengths
    goalselect attacks FILE       typed attacks before and after filtering
    goalselect select FILE        full selection report
    goalselect verify FILE        rationality postulates (or --fuzz N random bases)
    goalselect export-dot FILE    filtered attack graph in Graphviz format

Exit status: 0 on success, 1 on validation or postulate failure, 2 on usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .arguments import DEFAULT_MAX_ARGS, ArgumentLimitError, build_all
from .kb import KBError, dumps, load
from .postulates import verify
from .randkb import random_kb
from .semantics import (DEFAULT_MAX_CF_ARGS, DEFAULT_MAX_EXTENSIONS,
                        EnumerationLimitError, select, to_dot)
from .strength import logical_strength


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--tiebreak", choices=("pr", "lo"), default=None,
                        help="compare this strength dimension first on equal CO")
    common.add_argument("--max-args", type=int, default=DEFAULT_MAX_ARGS,
                        help="abort argument construction beyond this many arguments")
    common.add_argument("--max-extensions", type=int, default=DEFAULT_MAX_EXTENSIONS,
                        help="abort conflict-free enumeration beyond this many extensions")
    common.add_argument("--max-cf-args", type=int, default=DEFAULT_MAX_CF_ARGS,
                        help="refuse conflict-free enumeration above this many arguments")

    p = argparse.ArgumentParser(prog="goalselect", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="verb", required=True)
    for verb, doc in (
        ("check", "validate and echo the canonical knowledge base"),
        ("args", "list arguments with claim intervals and strengths"),
        ("attacks", "list typed attacks before and after the successful filter"),
        ("select", "run the whole selection pipeline"),
        ("export-dot", "write the filtered attack graph as Graphviz DOT"),
    ):
        sp = sub.add_parser(verb, parents=[common], help=doc)
        sp.add_argument("file")
    vp = sub.add_parser("verify", parents=[common], help="check the rationality postulates")
    vp.add_argument("file", nargs="?")
    vp.add_argument("--fuzz", type=int, default=0, metavar="N",
                    help="check N random knowledge bases instead of FILE")
    vp.add_argument("--seed", type=int, default=0, help="seed for --fuzz")
    return p


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _pipeline(ns, kb):
    return select(kb, tiebreak=ns.tiebreak, max_args=ns.max_args,
                  max_cf_args=ns.max_cf_args, max_extensions=ns.max_extensions)


def _cmd_check(ns, kb):
    if ns.format == "json":
        return dumps(kb), 0
    return (f"ok: {len(kb.beliefs)} beliefs, {len(kb.actions)} actions, {len(kb.goals)} goals, "
            f"{len(kb.resources)} resources, {len(kb.rules)} rules"), 0


def _cmd_args(ns, kb):
    args = build_all(kb, max_args=ns.max_args)
    rows = []
    for a in args:
        s = logical_strength(a)
        rows.append({"id": a.id, "claim": str(a.claim), "rules": a.signature,
                     "interval": [a.claim_interval.l, a.claim_interval.u],
                     "strength": {"co": s.co, "pr": s.pr, "lo": s.lo},
                     "subarguments": [x.id for x in a.subarguments]})
    if ns.format == "json":
        return json.dumps({"arguments": rows, "unsupported_goals": args.unsupported_goals},
                          indent=2), 0
    lines = [f"{r['id']:>3}  {r['claim']:<16} [{r['interval'][0]:.4g}, {r['interval'][1]:.4g}]  "
             f"<{r['strength']['co']:.4g}, {r['strength']['pr']:.4g}, {r['strength']['lo']:.4g}>  "
             f"{r['rules']}" for r in rows]
    lines += [f"warning: pursued goal {g} has no argument" for g in args.unsupported_goals]
    return "\n".join(lines), 0


def _cmd_attacks(ns, kb):
    rep = _pipeline(ns, kb)
    d = rep.to_dict()
    if ns.format == "json":
        return json.dumps({"attacks": d["attacks"],
                           "successful_attacks": d["successful_attacks"]}, indent=2), 0

    def show(attacks):
        return [f"  {t.attacker} -> {t.target}  ({','.join(sorted(x.value for x in t.types))})"
                for t in attacks]

    lines = [f"attacks ({len(rep.framework.attacks)}):"] + show(rep.framework.attacks)
    lines += [f"successful attacks ({len(rep.filtered.attacks)}):"] + show(rep.filtered.attacks)
    return "\n".join(lines), 0


def _cmd_select(ns, kb):
    rep = _pipeline(ns, kb)
    if ns.format == "json":
        return rep.to_json(), 0
    lines = [f"arguments: {len(rep.arguments)}, attacks: {len(rep.framework.attacks)}, "
             f"successful: {len(rep.filtered.attacks)}",
             "CF   = " + " ".join(str(e) for e in rep.cf),
             "CF'  = " + " ".join(str(e) for e in rep.cf_max_goal),
             "CF'' = " + " ".join(str(e) for e in rep.cf_max_util)]
    for e, goals in zip(rep.cf_max_util, rep.compatible_goals):
        lines.append(f"compatible goals {e}: " + ", ".join(str(g) for g in sorted(goals)))
    lines += [f"note: {d}" for d in rep.diagnostics]
    return "\n".join(lines), 0


def _cmd_dot(ns, kb):
    return to_dot(_pipeline(ns, kb).filtered), 0


def _verify_one(ns, kb):
    rep = _pipeline(ns, kb)
    return verify(rep.cf, rep.filtered, kb)


def _cmd_verify(ns, kb):
    report = _verify_one(ns, kb)
    if ns.format == "json":
        text = json.dumps(report.to_dict(), indent=2)
        sys.stderr.write(report.summary() + "\n")
    else:
        text = report.summary()
    return text, 0 if report.passed else 1


def _cmd_fuzz(ns):
    rng = random.Random(ns.seed)
    results = []
    for i in range(ns.fuzz):
        kb = random_kb(rng)
        try:
            report = _verify_one(ns, kb)
        except (ArgumentLimitError, EnumerationLimitError) as e:
            results.append({"instance": i, "skipped": str(e)})
            continue
        results.append({"instance": i, "passed": report.passed,
                        "failures": [{"members": m, **v.to_dict()} for m, v in report.failures()],
                        "kb": json.loads(dumps(kb)) if not report.passed else None})
    failed = [r for r in results if r.get("passed") is False]
    summary = f"{len(results)} random knowledge bases, {len(failed)} with postulate failures"
    if ns.format == "json":
        sys.stderr.write(summary + "\n")
        return json.dumps({"seed": ns.seed, "instances": results}, indent=2), 1 if failed else 0
    lines = [summary]
    for r in failed:
        for f in r["failures"]:
            lines.append(f"  #{r['instance']} {{{','.join(f['members'])}}} {f['check']}: "
                         f"{f['witnesses']}")
    return "\n".join(lines), 1 if failed else 0


COMMANDS = {
    "check": _cmd_check,
    "args": _cmd_args,
    "attacks": _cmd_attacks,
    "select": _cmd_select,
    "verify": _cmd_verify,
    "export-dot": _cmd_dot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    ns = parser.parse_args(argv)
    try:
        if ns.verb == "verify" and ns.fuzz:
            text, status = _cmd_fuzz(ns)
        else:
            if not ns.file:
                parser.error("a FILE is required unless --fuzz is given")
            kb = load(ns.file)
            text, status = COMMANDS[ns.verb](ns, kb)
    except KBError as e:
        sys.stderr.write(f"{getattr(ns, 'file', '')}: {e}\n")
        return 1
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except (ArgumentLimitError, EnumerationLimitError) as e:
        sys.stderr.write(f"{ns.file}: {e}\n")
        return 1
    _emit(text, ns.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
