#!/usr/bin/env python
# Copyright (C) 2024 Nice Zombies
"""A command line utility to run effective constructions."""
from __future__ import annotations

__all__: list[str] = ["ExperimentConfig", "main", "run"]

import logging
import sys
from argparse import ArgumentParser
from dataclasses import asdict, dataclass, field
from importlib import import_module
from os import environ
from pathlib import Path
from traceback import format_exception_only
from typing import TYPE_CHECKING, Any

import jsonyx
import jsonyx.allow

from effalg import (
    BitStream, CorruptStreamError, DivisibilityType, Enumeration,
    MalformedFactError, RadicalFieldDiagram, TranscendentalDiagram,
    Verdict, __version__, audit_invariants, audit_stream,
    constant_relation, cyclotomic_field, e0_relation, e0_to_tfab1,
    eval_bounded, example_field, format_sentence, henselize, inf_reduction,
    iso_rank1, phi_object, pure_transcendental, radical_field,
    rank1_from_type, read_diagram, reduce_sigma3, root_evidence,
    root_set_operator, scott_fd, scott_tfab, sentence_to_json, triple_prime,
    write_diagram, zero_divisor_probe,
)
from effalg import cof_to_tfab1 as _cof_to_tfab1
from effalg.corpus import E0_FAMILY, TYPES
from effalg.signatures import FIELD, GROUP

if TYPE_CHECKING:
    from collections.abc import Callable

    from effalg import DiagramStream, Sigma3Relation

logger: logging.Logger = logging.getLogger("effalg")

_BUDGETS: tuple[str, ...] = (
    "stages", "witness_bound", "generator_bound", "precision", "indices",
    "k_bound",
)
_DEFAULTS: dict[str, Any] = {
    "stages": 200,
    "witness_bound": 4,
    "generator_bound": 3,
    "precision": 6,
    "indices": 4,
    "k_bound": 3,
    "seed": 0,
}


@dataclass(frozen=True)
class ExperimentConfig:
    """The resolved configuration of a run.

    :param command: the subcommand
    :param out: the output directory
    :param inputs: the command-specific inputs
    :raises ValueError: for a budget that isn't positive
    """

    command: str
    out: str
    stages: int = 200
    witness_bound: int = 4
    generator_bound: int = 3
    precision: int = 6
    indices: int = 4
    k_bound: int = 3
    seed: int = 0
    inputs: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate the budgets."""
        for name in _BUDGETS:
            if (value := getattr(self, name)) < 1:
                msg: str = f"{name} must be positive, got {value}"
                raise ValueError(msg)


def _parse_set(text: str) -> Enumeration:
    kind, _, values = text.partition(":")
    numbers: list[int] = [int(v) for v in values.split(",") if v.strip()]
    if kind == "all":
        return Enumeration.everything()

    if kind == "none":
        return Enumeration.nothing()

    if kind == "finite":
        return Enumeration.finite_set(numbers)

    if kind == "cofinite":
        return Enumeration.cofinite_set(numbers)

    if kind == "multiples" and numbers:
        return Enumeration.multiples(*numbers)

    msg: str = f"Invalid set {text!r}"
    raise ValueError(msg)


def _parse_type(text: str) -> DivisibilityType:
    return DivisibilityType.parse(TYPES.get(text, text))


def _parse_field(text: str) -> DiagramStream:
    kind, _, value = text.partition(":")
    if kind == "q":
        return cyclotomic_field(1)

    if kind == "cyclotomic":
        return cyclotomic_field(int(value))

    if kind == "example":
        return example_field()

    if kind == "radical":
        return radical_field([int(p) for p in value.split(",")])

    if kind == "rational-functions":
        return pure_transcendental(cyclotomic_field(1))

    msg: str = f"Invalid field {text!r}"
    raise ValueError(msg)


def _transcendence_basis(stream: DiagramStream, stage: int) -> list[int]:
    if isinstance(stream, RadicalFieldDiagram):
        value: Any = stream.t
    elif isinstance(stream, TranscendentalDiagram):
        value = stream.field.gen
    else:
        return []

    code: int | None = stream.code_of(value, stage)
    return [] if code is None else [code]


def _load_relation(name: str, program: str | None) -> Sigma3Relation:
    if name == "e0":
        return e0_relation()

    if name in {"const-true", "const-false"}:
        return constant_relation(name == "const-true")

    if not program:
        msg: str = "A custom relation needs --program MODULE:ATTRIBUTE"
        raise ValueError(msg)

    module, _, attr = program.partition(":")
    return getattr(import_module(module), attr)


def _write(stream: DiagramStream, stage: int, path: Path) -> int:
    with path.open("w", encoding="utf-8", newline="\n") as fp:
        return write_diagram(stream, stage, fp)


def _dump(obj: Any, path: Path) -> None:
    # witnesses of rank-1 verdicts hold infinite entries
    jsonyx.write(obj, path, indent=2, allow=jsonyx.allow.NAN_AND_INFINITY)


def _scott(config: ExperimentConfig, out: Path, report: dict[str, Any],
           ) -> None:
    basis: list[int] | None = config.inputs.get("basis")
    if config.inputs.get("field"):
        stream: DiagramStream = _parse_field(config.inputs["field"])
        if basis is None:
            basis = _transcendence_basis(stream, config.stages)

        sentence = scott_fd(stream, basis, config.stages)
    else:
        stream = rank1_from_type(_parse_type(
            config.inputs.get("group") or "integers",
        ))
        sentence = scott_tfab(stream, basis or [1], config.stages)
        basis = basis or [1]

    verdict: Verdict = eval_bounded(
        sentence, stream, config.stages, config.witness_bound,
        config.generator_bound,
    )
    _dump(sentence_to_json(sentence, config.generator_bound),
          out / "sentence.json")
    (out / "sentence.txt").write_text(
        format_sentence(sentence, config.generator_bound) + "\n",
        encoding="utf-8",
    )
    report.update(basis=basis, verdict=verdict.name.lower())
    if not verdict.sound:
        report["warnings"].append(f"verdict {verdict.name.lower()}")


def _g2f(config: ExperimentConfig, out: Path, report: dict[str, Any],
         ) -> None:
    group: DiagramStream = rank1_from_type(_parse_type(
        config.inputs.get("group") or "integers",
    ))
    field_copy = phi_object(group)
    report["facts"] = _write(field_copy, config.stages, out / "field.jsonl")
    generator: int | None = field_copy.monomial(1, config.stages)
    report["roots"] = {
        str(n): root_evidence(field_copy, generator, n, config.stages)
        for n in range(2, config.indices + 2)
    } if generator is not None else {}
    probe = zero_divisor_probe(
        config.witness_bound, group, config.stages, config.seed,
    )
    report["probe"] = {
        "trials": probe.trials,
        "unknown": probe.unknown,
        "violations": [[str(a), str(b)] for a, b in probe.violations],
    }
    if probe.unknown:
        report["warnings"].append(f"{probe.unknown} undecided products")


def _henselize(config: ExperimentConfig, out: Path, report: dict[str, Any],
               ) -> None:
    field_copy = henselize(cyclotomic_field(config.inputs.get("conductor", 1)))
    report["facts"] = _write(field_copy, config.stages, out / "field.jsonl")
    report["lifted"] = [poly.format("Y") for poly in field_copy.lifted]
    report["elements"] = [
        str(field_copy.element(code, config.stages))
        for code in range(min(config.indices, len(field_copy.elements)))
    ]


def _transcend(config: ExperimentConfig, out: Path, report: dict[str, Any],
               ) -> None:
    field_copy = pure_transcendental(
        cyclotomic_field(config.inputs.get("conductor", 1)),
    )
    report["facts"] = _write(field_copy, config.stages, out / "field.jsonl")
    report["elements"] = [
        str(field_copy.element(code, config.stages))
        for code in range(min(config.indices, len(field_copy.elements)))
    ]


def _reduce(config: ExperimentConfig, out: Path, report: dict[str, Any],
            ) -> None:
    if oracles := config.inputs.get("oracles"):
        family: list[BitStream] = [
            BitStream.parse(line)
            for line in Path(oracles).read_text("utf-8").splitlines()
            if line.strip()
        ]
    else:
        family = list(E0_FAMILY)

    relation: Sigma3Relation = _load_relation(
        config.inputs.get("relation", "e0"), config.inputs.get("program"),
    )
    reduction, joined = reduce_sigma3(family, relation)
    size: int = min(config.indices, len(family))
    diagram_stage: int = min(
        config.stages, config.inputs.get("diagram_stage", 50),
    )
    for l in range(size):  # noqa: E741
        _write(joined.component(l), diagram_stage, out / f"G{l}.jsonl")

    with (out / "chips.log").open("w", encoding="utf-8", newline="\n") as fp:
        for stage in range(config.stages):
            chip = reduction.scheduler.chip(stage)
            fp.write(f"{stage}\t{chip.m}\t{chip.n}\t{chip.value}\n")

    triples: list[tuple[int, int, int]] = [
        (m, n, k) for n in range(size) for m in range(n)
        for k in range(config.k_bound)
    ]
    samples: range = range(0, config.stages + 1, max(config.stages // 10, 1))
    audit = audit_invariants(reduction, samples, triples)
    _dump(asdict(audit), out / "audit.json")
    pairs: dict[str, Any] = {}
    for m, n, k in triples:
        machine = reduction.machine(m, n, k, config.stages)
        pairs.setdefault(f"{m},{n}", {})[str(triple_prime(m, n, k))] = {
            "key_exponent": machine.r,
            "chips": reduction.scheduler.count(m, n, k, config.stages),
        }

    report.update(relation=relation.name, clean=audit.clean, triples=pairs)
    if not audit.clean:
        report["warnings"].append(f"{len(audit.violations)} violations")


def _e0(config: ExperimentConfig, out: Path, report: dict[str, Any]) -> None:
    stream: BitStream = BitStream.parse(config.inputs.get("stream", "0"))
    report["facts"] = _write(
        e0_to_tfab1(stream), config.stages, out / "group.jsonl",
    )
    report["stream"] = str(stream)


def _cof(config: ExperimentConfig, out: Path, report: dict[str, Any],
         ) -> None:
    enumeration: Enumeration = _parse_set(config.inputs.get("set", "none"))
    report["facts"] = _write(
        _cof_to_tfab1(enumeration), config.stages, out / "group.jsonl",
    )
    report["set"] = enumeration.name


def _inf_field(config: ExperimentConfig, out: Path, report: dict[str, Any],
               ) -> None:
    enumeration: Enumeration = _parse_set(config.inputs.get("set", "none"))
    field_copy = inf_reduction(enumeration)
    report["facts"] = _write(field_copy, config.stages, out / "field.jsonl")
    report["conductor"] = field_copy.conductor_at(config.stages)


def _rootset(config: ExperimentConfig, _out: Path, report: dict[str, Any],
             ) -> None:
    stream: DiagramStream = _parse_field(config.inputs.get("field") or "q")
    approximation = root_set_operator(stream)
    report["confirmed"] = sorted(approximation.confirmed(
        config.stages, config.indices,
    ))


def _audit(config: ExperimentConfig, _out: Path, report: dict[str, Any],
           ) -> None:
    signature = FIELD if config.inputs.get("signature") == "field" else GROUP
    with Path(config.inputs["file"]).open(encoding="utf-8") as fp:
        stream = read_diagram(fp, signature)

    violations: list[str] = audit_stream(stream, range(config.stages))
    report.update(clean=not violations, violations=violations)


def _compare(config: ExperimentConfig, _out: Path, report: dict[str, Any],
             ) -> None:
    first, second = config.inputs["types"]
    verdict = iso_rank1(_parse_type(first), _parse_type(second),
                        config.stages)
    report.update(
        verdict=verdict.status.value, reason=verdict.reason,
        witness=[list(item) for item in verdict.witness],
    )
    if verdict.status.value == "unknown-at-bound":
        report["warnings"].append("verdict unknown at the bound")


_COMMANDS: dict[str, Callable[[ExperimentConfig, Path, dict[str, Any]],
                              None]] = {
    "scott": _scott,
    "g2f": _g2f,
    "henselize": _henselize,
    "transcend": _transcend,
    "reduce-sigma3": _reduce,
    "e0": _e0,
    "cof": _cof,
    "inf-field": _inf_field,
    "rootset": _rootset,
    "audit": _audit,
    "compare": _compare,
}


def run(config: ExperimentConfig) -> dict[str, Any]:
    """Run a command, writing its artifacts and report.

    :param config: the configuration
    :return: the report
    """
    out: Path = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    _dump(asdict(config), out / "config.json")
    report: dict[str, Any] = {"command": config.command, "warnings": []}
    _COMMANDS[config.command](config, out, report)
    for warning in report["warnings"]:
        logger.warning("%s: %s", config.command, warning)

    _dump(report, out / "report.json")
    return report


# pylint: disable-next=R0903
class _Namespace:
    command: str | None
    config: str | None
    verbose: int


def _configure(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--version", action="version", version=f"effalg {__version__}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress, twice for debug records",
    )
    parent_parser: ArgumentParser = ArgumentParser(add_help=False)
    for name, metavar, text in (
        ("stages", "N", "the number of stages to run"),
        ("witness-bound", "N", "the codes a quantifier tries"),
        ("generator-bound", "N", "the bound passed to infinitary clauses"),
        ("precision", "N", "the number of series coefficients"),
        ("indices", "N", "the number of structures or primes to report"),
        ("k-bound", "N", "the witness bounds audited per pair"),
        ("seed", "N", "the seed of random sampling"),
    ):
        parent_parser.add_argument(
            f"--{name}", type=int, help=text, metavar=metavar,
        )

    parent_parser.add_argument(
        "--out", help="the output directory, by default under $EFFALG_OUT",
    )
    parent_parser.add_argument(
        "--config", help="a JSON file with default settings",
    )
    commands = parser.add_subparsers(title="commands", dest="command")

    scott_parser = commands.add_parser(
        "scott",
        help="build and evaluate a Scott sentence",
        description="build and evaluate a Scott sentence",
        parents=[parent_parser],
    )
    target = scott_parser.add_mutually_exclusive_group()
    target.add_argument("--group", help="a rank-1 type or shipped name")
    target.add_argument(
        "--field",
        help='a field: "q", "cyclotomic:N", "example", "radical:P,..." or '
             '"rational-functions"',
    )
    scott_parser.add_argument(
        "--basis", type=int, nargs="*", help="the codes of the basis",
    )

    g2f_parser = commands.add_parser(
        "g2f",
        help="embed a rank-1 group in a field",
        description="embed a rank-1 group in a field",
        parents=[parent_parser],
    )
    g2f_parser.add_argument("--group", help="a rank-1 type or shipped name")

    for name, text in (
        ("henselize", "henselize a cyclotomic field extended by t"),
        ("transcend", "adjoin a transcendental to a cyclotomic field"),
    ):
        sub = commands.add_parser(
            name, help=text, description=text, parents=[parent_parser],
        )
        sub.add_argument("--conductor", type=int, help="the conductor")

    reduce_parser = commands.add_parser(
        "reduce-sigma3",
        help="reduce a relation on streams to rank-1 groups",
        description="reduce a relation on streams to rank-1 groups",
        parents=[parent_parser],
    )
    reduce_parser.add_argument(
        "--relation",
        choices=["e0", "const-true", "const-false", "custom"],
        help="the relation",
    )
    reduce_parser.add_argument(
        "--program", help="MODULE:ATTRIBUTE of a custom relation",
    )
    reduce_parser.add_argument(
        "--oracles", help="a file with one stream literal per line",
    )
    reduce_parser.add_argument(
        "--diagram-stage", type=int, help="the stage of the written groups",
    )

    e0_parser = commands.add_parser(
        "e0",
        help="reduce a stream to a rank-1 group",
        description="reduce a stream to a rank-1 group",
        parents=[parent_parser],
    )
    e0_parser.add_argument("--stream", help='a literal such as "01(10)"')

    for name, text in (
        ("cof", "reduce a set to a rank-1 group"),
        ("inf-field", "reduce a set to an algebraic field"),
    ):
        sub = commands.add_parser(
            name, help=text, description=text, parents=[parent_parser],
        )
        sub.add_argument(
            "--set",
            help='"all", "none", "finite:A,B", "cofinite:A,B" or '
                 '"multiples:M"',
        )

    rootset_parser = commands.add_parser(
        "rootset",
        help="list integer polynomials with a root in a field",
        description="list integer polynomials with a root in a field",
        parents=[parent_parser],
    )
    rootset_parser.add_argument("--field", help="a field")

    audit_parser = commands.add_parser(
        "audit",
        help="audit a diagram file",
        description="audit a diagram file",
        parents=[parent_parser],
    )
    audit_parser.add_argument("file", help="the path to the JSONL diagram")
    audit_parser.add_argument(
        "--signature", choices=["group", "field"], help="the signature",
    )

    compare_parser = commands.add_parser(
        "compare",
        help="compare two rank-1 types",
        description="compare two rank-1 types",
        parents=[parent_parser],
    )
    compare_parser.add_argument(
        "types", nargs=2, help="rank-1 types or shipped names",
    )


_GENERAL: frozenset[str] = frozenset({
    *_DEFAULTS, "out", "config", "command", "verbose",
})


def _resolve(args: _Namespace) -> ExperimentConfig:
    settings: dict[str, Any] = dict(_DEFAULTS)
    inputs: dict[str, Any] = {}
    if args.config:
        document: dict[str, Any] = jsonyx.read(args.config)
        for key, value in document.items():
            key = key.replace("-", "_")
            if key in _DEFAULTS or key == "out":
                settings[key] = value
            elif key == "inputs":
                inputs.update(value)
            elif key != "command":
                inputs[key] = value

    for key, value in vars(args).items():
        if value is None:
            continue

        if key in _DEFAULTS or key == "out":
            settings[key] = value
        elif key not in _GENERAL:
            inputs[key] = value

    if "out" not in settings:
        root: Path = Path(environ.get("EFFALG_OUT", "effalg-out"))
        settings["out"] = str(root / args.command)  # type: ignore

    return ExperimentConfig(command=args.command, inputs=inputs, **settings)


def main(argv: list[str] | None = None) -> None:
    """Start effalg."""
    parser: ArgumentParser = ArgumentParser(
        description="a command line utility to run effective constructions",
    )
    _configure(parser)
    args: _Namespace = parser.parse_args(argv, namespace=_Namespace())
    if not args.command:
        parser.print_help()
        return

    logging.basicConfig(
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[
            min(args.verbose, 2)
        ],
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config: ExperimentConfig = _resolve(args)
    except jsonyx.JSONSyntaxError as exc:
        sys.stderr.write("".join(jsonyx.format_syntax_error(exc)))
        sys.exit(2)
    except (OSError, TypeError, ValueError) as exc:
        parser.error("".join(format_exception_only(None, exc)).strip())

    try:
        run(config)
    except BrokenPipeError as exc:
        sys.exit(exc.errno)
    except (CorruptStreamError, MalformedFactError) as exc:
        sys.stderr.write("".join(format_exception_only(None, exc)))
        sys.exit(3)
    except (ArithmeticError, LookupError, OSError, RuntimeError, TypeError,
            ValueError) as exc:
        sys.stderr.write("".join(format_exception_only(None, exc)))
        sys.exit(1)


if __name__ == "__main__":
    main()
