"""Command-line surface over knowledge-base files.

    supervene check FILE --base a --super b [--json]
    supervene closure FILE --rule r1 --mode antecedent|consequent [--star-fill T|F]
    supervene predict FILE --task t1 [--json]
    supervene lattice FILE [--constraint r1] --format dot|ascii
    supervene oracle [--max-props K] [--max-entities M] [--mutate NAME] [--json]

FILE may be '-' for standard input. Reports are stable `KEY: value` lines;
`--json` mirrors the same keys. Exit codes: 0 when the command succeeds
(and, for `check`, the supervenience holds), 2 on malformed input or bad
references, 3 when a checked property comes back negative.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, closure, kb, model, oracle, render, selection
from .errors import InvalidModelError, SuperveneError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _literal_list(raw: str) -> tuple[model.Literal, ...]:
    tokens = [tok.strip() for tok in raw.split(",") if tok.strip()]
    return tuple(model.Literal.parse(tok) for tok in tokens)


def _lits_str(literals) -> str:
    return " ".join(str(lit) for lit in literals)


def _ids_in_task_order(ids, task: selection.SelectionTask) -> list[str]:
    return [card.id for card in task.cards if card.id in ids]


def _set_or_dash(ids, task) -> str:
    ordered = _ids_in_task_order(ids, task)
    return " ".join(ordered) if ordered else "-"


def cmd_check(args) -> int:
    doc = kb.parse_kb(_read(args.file))
    base = _literal_list(args.base)
    sup = _literal_list(args.super)
    if not base or not sup:
        raise InvalidModelError("--base and --super need at least one literal")
    domain = doc.domain

    ws_witness = analysis.supervenience_witness(domain, sup, base)
    det_witness = analysis.determination_witness(domain, base, sup)
    od_witness = analysis.dependence_witness(domain, sup, base)
    report = analysis.compression_report(analysis.build_rho(domain, base, sup))

    if args.json:
        out = {
            "base": [str(lit) for lit in base],
            "super": [str(lit) for lit in sup],
            "ws": ws_witness is None,
            "det": det_witness is None,
            "od": od_witness is None,
            "functional": report.functional,
        }
        if ws_witness is not None:
            out["ws_witness"] = [ws_witness[0].id, ws_witness[1].id]
        if det_witness is not None:
            out["det_witness"] = [det_witness[0].id, det_witness[1].id]
        if od_witness is not None:
            out["od_witness"] = [od_witness[0].id, str(od_witness[1])]
        if report.functional:
            out["lossy"] = report.lossy
            out["gain_bits"] = round(report.gain_bits, 6)
            out["raw_gain_bits"] = round(report.raw_gain_bits, 6)
            out["mapping"] = {str(a): str(b) for a, b in report.mapping.items()}
        else:
            a, b1, b2 = report.conflict
            out["conflict"] = {"base": str(a), "first": str(b1), "second": str(b2)}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        lines = [
            f"BASE: {_lits_str(base)}",
            f"SUPER: {_lits_str(sup)}",
            f"WS: {'yes' if ws_witness is None else 'no'}",
        ]
        if ws_witness is not None:
            lines.append(f"WS_WITNESS: {ws_witness[0].id} {ws_witness[1].id}")
        lines.append(f"DET: {'yes' if det_witness is None else 'no'}")
        if det_witness is not None:
            lines.append(f"DET_WITNESS: {det_witness[0].id} {det_witness[1].id}")
        lines.append(f"OD: {'yes' if od_witness is None else 'no'}")
        if od_witness is not None:
            lines.append(f"OD_WITNESS: {od_witness[0].id} {od_witness[1]}")
        lines.append(f"FUNCTIONAL: {'yes' if report.functional else 'no'}")
        if report.functional:
            lines.append(f"LOSSY: {'yes' if report.lossy else 'no'}")
            lines.append(f"GAIN_BITS: {report.gain_bits:.6f}")
            lines.append(f"RAW_GAIN_BITS: {report.raw_gain_bits:.6f}")
            if report.mapping:
                cells = "; ".join(f"{a} => {b}" for a, b in report.mapping.items())
            else:
                cells = "-"
            lines.append(f"MAPPING: {cells}")
        else:
            a, b1, b2 = report.conflict
            lines.append(f"CONFLICT: {a} => {b1} | {b2}")
        print("\n".join(lines))
    return 0 if ws_witness is None else 3


def cmd_closure(args) -> int:
    doc = kb.parse_kb(_read(args.file))
    rule = doc.domain.conditional(args.rule)
    fill = args.star_fill == "T"
    if args.mode == "antecedent":
        result = closure.close_antecedent(doc.domain, rule, unconstrained_value=fill)
    else:
        result = closure.close_consequent(doc.domain, rule, unconstrained_value=fill)
    extended = kb.KbDocument(result.extended_domain, doc.cards, doc.tasks)
    sys.stdout.write(kb.render_kb(extended))
    return 0


def cmd_predict(args) -> int:
    doc = kb.parse_kb(_read(args.file))
    task = doc.task(args.task)
    report = selection.compare(task)
    prediction = report.prediction

    if args.json:
        out = {
            "task": args.task,
            "rule": {
                "id": task.rule.id,
                "antecedent": str(task.rule.antecedent),
                "consequent": str(task.rule.consequent),
            },
            "ca1": task.ca1_applies,
            "ca2": task.ca2_applies,
            "reading": prediction.reading,
            "predicted": _ids_in_task_order(prediction.selected, task),
            "normative": _ids_in_task_order(report.normative, task),
            "agreement": report.agreement,
            "hits": _ids_in_task_order(report.hits, task),
            "omissions": _ids_in_task_order(report.omissions, task),
            "commissions": _ids_in_task_order(report.commissions, task),
            "cards": [
                {
                    "id": card.id,
                    "visible": str(card.visible),
                    "selected": card.id in prediction.selected,
                    "note": prediction.rationale[card.id],
                }
                for card in task.cards
            ],
        }
        if task.label is not None:
            out["label"] = task.label
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        lines = [f"TASK: {args.task}"]
        if task.label is not None:
            lines.append(f"LABEL: {task.label}")
        lines.append(f"RULE: {task.rule}")
        lines.append(f"CA1: {'yes' if task.ca1_applies else 'no'}")
        lines.append(f"CA2: {'yes' if task.ca2_applies else 'no'}")
        lines.append(f"READING: {prediction.reading}")
        lines.append(f"PREDICTED: {_set_or_dash(prediction.selected, task)}")
        lines.append(f"NORMATIVE: {_set_or_dash(report.normative, task)}")
        lines.append(f"AGREEMENT: {'yes' if report.agreement else 'no'}")
        lines.append(f"HITS: {_set_or_dash(report.hits, task)}")
        lines.append(f"OMISSIONS: {_set_or_dash(report.omissions, task)}")
        lines.append(f"COMMISSIONS: {_set_or_dash(report.commissions, task)}")
        for card in task.cards:
            tag = "selected" if card.id in prediction.selected else "not selected"
            lines.append(
                f"CARD {card.id}: {card.visible} [{tag}] {prediction.rationale[card.id]}"
            )
        print("\n".join(lines))
    return 0


def cmd_lattice(args) -> int:
    doc = kb.parse_kb(_read(args.file))
    constraint = None
    if args.constraint is not None:
        constraint = doc.domain.conditional(args.constraint)
    lattice = model.build_lattice(doc.domain.vocabulary, constraint)
    if args.format == "dot":
        sys.stdout.write(render.to_dot(lattice))
    else:
        sys.stdout.write(render.to_ascii(lattice))
    return 0


def cmd_oracle(args) -> int:
    report = oracle.run_oracle(
        max_props=args.max_props,
        max_entities=args.max_entities,
        mutate=args.mutate,
    )
    if args.json:
        out = {
            "max_props": report.max_props,
            "max_entities": report.max_entities,
            "mutate": report.mutate,
            "checks": [
                {
                    "name": check.name,
                    "cases": check.cases,
                    "failures": check.failures,
                    "examples": list(check.examples),
                }
                for check in report.checks
            ],
            "total_cases": report.total_cases,
            "total_failures": report.total_failures,
            "passed": report.passed,
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        lines = [
            f"ORACLE: max_props={report.max_props} "
            f"max_entities={report.max_entities} mutate={report.mutate or '-'}"
        ]
        for check in report.checks:
            lines.append(
                f"CHECK {check.name}: cases={check.cases} failures={check.failures}"
            )
            for example in check.examples:
                lines.append(f"  {example}")
        lines.append(
            f"TOTAL: cases={report.total_cases} failures={report.total_failures}"
        )
        lines.append(f"RESULT: {'pass' if report.passed else 'fail'}")
        print("\n".join(lines))
    return 0 if report.passed else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supervene",
        description="Dependence checks, rule closures, and card-selection "
        "predictions over finite propositional domains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="dependence and compression report")
    p.add_argument("file", help="KB file, or - for stdin")
    p.add_argument("--base", required=True, help="comma-separated literals")
    p.add_argument("--super", required=True, help="comma-separated literals")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", help="emit the KB extended with a star property")
    p.add_argument("file")
    p.add_argument("--rule", required=True)
    p.add_argument("--mode", required=True, choices=("antecedent", "consequent"))
    p.add_argument(
        "--star-fill",
        choices=("T", "F"),
        default="F",
        help="star value on the unconstrained entity pattern",
    )
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("predict", help="predicted vs normative card selection")
    p.add_argument("file")
    p.add_argument("--task", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("lattice", help="render the configuration lattice")
    p.add_argument("file")
    p.add_argument("--constraint", help="prune by this rule id")
    p.add_argument("--format", required=True, choices=("dot", "ascii"))
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("oracle", help="exhaustive brute-force cross-check")
    p.add_argument("--max-props", type=int, default=3)
    p.add_argument("--max-entities", type=int, default=4)
    p.add_argument("--mutate", choices=oracle.MUTATIONS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SuperveneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
