"""Command-line entry point.

Exit codes: 0 success, 1 parse/validation failure, 2 hypothesis or bound
violated, 3 extraction failed within the horizon.  Reports are ``key value``
lines written to stdout, or to ``--report FILE``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import fixtures
from .errors import InvalidParams, ParseError, TreeError
from .extractors import (
    extract_ext_bounded,
    extract_pf_bounded,
    extract_w_bounded_kl,
    lookahead_stability_report,
    verify,
)
from .formats import (
    extraction_from_report,
    extraction_lines,
    format_enum,
    format_tree,
    load_tree,
    parse_enum,
    parse_node,
    parse_report,
    parse_table,
    show_list,
)
from .tables import FunctionTable, PredicateTable
from .transforms import (
    cex_level_width,
    cex_prefix_free,
    hat_interpret,
    level_widths,
    pad_to_narrow,
    unique_path_tree,
)
from .tree_core import max_antichain, show, vsmall_check, width_profile

EXTRACTORS = {"pf": extract_pf_bounded, "ext": extract_ext_bounded, "wbd": extract_w_bounded_kl}
GEN_KINDS = ("comb", "twochain", "fullbinary", "bristled", "cex-pf", "cex-width", "unique-path", "hat")


@dataclass
class ExperimentConfig:
    command: str
    input_path: str | None = None
    params: dict = field(default_factory=dict)
    output_path: str | None = None
    seed: int = 0


def _need(params: dict, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise InvalidParams("missing parameter(s): " + ", ".join("--" + n for n in missing))
    return [params[n] for n in names]


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidParams(f"expected comma-separated naturals, got {text!r}") from None


def _parse_cli_node(text: str) -> tuple:
    text = text.strip()
    if " " in text or text == "-":
        return parse_node(text)
    return tuple(int(ch) for ch in text)


def _source(cfg: ExperimentConfig) -> str:
    return Path(cfg.input_path).name


def _load_table(path, kind):
    table = parse_table(Path(path).read_text())
    if not isinstance(table, kind):
        raise ParseError(f"{path}: expected a {'predicate' if kind is PredicateTable else 'function'} table")
    return table


def _cmd_validate(cfg):
    tree = load_tree(cfg.input_path)
    return [
        "report validate",
        f"source {_source(cfg)}",
        "status valid",
        f"alphabet {tree.alphabet}",
        f"horizon {tree.horizon}",
        f"nodes {len(tree)}",
        f"depth {tree.depth}",
        f"branching {tree.branching}",
    ]


def _cmd_widths(cfg):
    tree = load_tree(cfg.input_path)
    lookaheads = _csv_ints(cfg.params.get("lookaheads") or "0")
    report = width_profile(tree, lookaheads)
    return ["report widths", f"source {_source(cfg)}"] + report.lines()


def _cmd_antichain(cfg):
    tree = load_tree(cfg.input_path)
    size, witness = max_antichain(tree)
    return ["report antichain", f"source {_source(cfg)}", f"size {size}", f"witness {show_list(witness)}"]


def _cmd_pad(cfg):
    tree = load_tree(cfg.input_path)
    (c,) = _need(cfg.params, "c")
    padded, sched = pad_to_narrow(tree, c, cfg.params.get("levels"))
    out = cfg.params.get("out")
    if out:
        Path(out).write_text(format_tree(padded))
    return [
        "report pad",
        f"source {_source(cfg)}",
        f"c {c}",
        "schedule " + " ".join(map(str, sched.entries)),
        f"padded_horizon {padded.horizon}",
        f"padded_nodes {len(padded)}",
        "padded_widths " + " ".join(map(str, level_widths(padded))),
        f"out {Path(out).name if out else '-'}",
    ]


def _budget(params, tree):
    s = params.get("lookahead")
    length = params.get("len")
    if s is None:
        s = tree.horizon // 2 if length is None else tree.horizon - length
    if length is None:
        length = tree.horizon - s
    return length, s


def _cmd_extract(cfg):
    variant = cfg.params.get("variant")
    if variant not in EXTRACTORS:
        raise InvalidParams(f"extract variant must be one of {sorted(EXTRACTORS)}")
    tree = load_tree(cfg.input_path)
    (c,) = _need(cfg.params, "c")
    length, s = _budget(cfg.params, tree)
    result, cert = EXTRACTORS[variant](tree, c, length, s)
    return extraction_lines(variant, _source(cfg), c, result, cert)


def _cmd_verify(cfg):
    report_path, tree_path = _need(cfg.params, "report_in", "tree_in")
    fields = parse_report(Path(report_path).read_text())
    variant, c, result, cert = extraction_from_report(fields)
    tree = load_tree(tree_path)
    problems = verify(tree, result, cert, c)
    lines = [
        "report verify",
        f"variant {variant}",
        f"report_source {fields.get('source', '-')}",
        f"tree {Path(tree_path).name}",
        f"path {show(result.path)}",
        f"status {'failed' if problems else 'verified'}",
    ]
    lines += [f"problem {p}" for p in problems]
    return lines, (1 if problems else 0)


def _cmd_stability(cfg):
    tree = load_tree(cfg.input_path)
    nodes_text, look_text = _need(cfg.params, "nodes", "lookaheads")
    nodes = [_parse_cli_node(t) for t in nodes_text.split(",")]
    report = lookahead_stability_report(tree, nodes, _csv_ints(look_text))
    return ["report stability", f"source {_source(cfg)}"] + report.lines()


def _cmd_vsmall(cfg):
    tree = load_tree(cfg.input_path)
    f_path, start = _need(cfg.params, "f", "start")
    report = vsmall_check(tree, _load_table(f_path, FunctionTable), start)
    return ["report vsmall", f"source {_source(cfg)}"] + report.lines(), (0 if report.passed else 2)


def _generate(cfg):
    p = cfg.params
    kind = p.get("kind")
    if kind not in GEN_KINDS:
        raise InvalidParams(f"gen kind must be one of {', '.join(GEN_KINDS)}")
    depth = p.get("depth")
    if kind == "comb":
        return fixtures.comb(6 if depth is None else depth)
    if kind == "twochain":
        return fixtures.twochain(6 if depth is None else depth)
    if kind == "fullbinary":
        return fixtures.fullbinary(3 if depth is None else depth)
    if kind == "bristled":
        (k,) = _need(p, "k")
        return fixtures.bristled_chains(k, 24 if depth is None else depth, cfg.seed, p.get("bristle") or 3)
    if kind == "hat":
        enum_path, depth = _need(p, "enum", "depth")
        return hat_interpret(parse_enum(Path(enum_path).read_text()), depth)
    table_path, horizon = _need(p, "table", "horizon")
    if kind == "cex-pf":
        return cex_prefix_free(_load_table(table_path, FunctionTable), horizon)
    theta = _load_table(table_path, PredicateTable)
    if kind == "unique-path":
        return unique_path_tree(theta, horizon)
    (c,) = _need(p, "c")
    return cex_level_width(theta, c, horizon)


def _cmd_gen(cfg):
    made = _generate(cfg)
    if hasattr(made, "stages"):
        text = format_tree(made.accumulate()) if cfg.params.get("accumulate") else format_enum(made)
    else:
        text = format_tree(made)
    out = cfg.params.get("out")
    if not out:
        return text.splitlines()
    Path(out).write_text(text)
    return ["report gen", f"kind {cfg.params['kind']}", f"seed {cfg.seed}", f"out {Path(out).name}"]


HANDLERS = {
    "validate": _cmd_validate,
    "widths": _cmd_widths,
    "antichain": _cmd_antichain,
    "pad": _cmd_pad,
    "extract": _cmd_extract,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "stability": _cmd_stability,
    "vsmall": _cmd_vsmall,
}


def run(cfg: ExperimentConfig) -> tuple[int, list[str]]:
    """Execute one command; returns (exit code, report lines)."""
    if cfg.command not in HANDLERS:
        return 1, [f"error unknown command {cfg.command!r}"]
    try:
        out = HANDLERS[cfg.command](cfg)
    except TreeError as exc:
        return exc.exit_code, [f"report {cfg.command}", "status error", f"error {exc}"]
    except OSError as exc:
        return 1, [f"report {cfg.command}", "status error", f"error {exc}"]
    if isinstance(out, tuple):
        lines, code = out
        return code, lines
    return 0, out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wkl", description="Width-bounded tree analysis and path extraction.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", help="write the report to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    def with_file(name, help_):
        sp = add(name, help_)
        sp.add_argument("file")
        return sp

    with_file("validate", "check a tree or enumeration file")
    with_file("widths", "level and lookahead widths").add_argument("--lookaheads", default="0")
    with_file("antichain", "largest prefix-free subset")
    sp = with_file("pad", "pad a binary tree to a ternary tree of width <= c")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--levels", type=int)
    sp.add_argument("--out")

    sp = add("extract", "extract a path with a certificate")
    sp.add_argument("variant", choices=sorted(EXTRACTORS))
    sp.add_argument("file")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--len", type=int)
    sp.add_argument("--lookahead", type=int)

    sp = add("gen", "generate a fixture tree or enumeration")
    sp.add_argument("kind", choices=GEN_KINDS)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--bristle", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--table")
    sp.add_argument("--enum")
    sp.add_argument("--c", type=int)
    sp.add_argument("--horizon", type=int)
    sp.add_argument("--accumulate", action="store_true", help="write the accumulated tree, not the enumeration")
    sp.add_argument("--out")

    sp = add("verify", "re-check an extraction report against a tree")
    sp.add_argument("report_in")
    sp.add_argument("tree_in")

    sp = with_file("stability", "lookahead survival matrix")
    sp.add_argument("--nodes", required=True, help="comma-separated nodes, e.g. 100,101")
    sp.add_argument("--lookaheads", required=True)

    sp = with_file("vsmall", "very-smallness check along a function table")
    sp.add_argument("--f", required=True)
    sp.add_argument("--start", type=int, required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "file", "report", "seed")}
    return ExperimentConfig(
        command=args.command,
        input_path=getattr(args, "file", None),
        params=params,
        output_path=args.report,
        seed=getattr(args, "seed", 0),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    code, lines = run(cfg)
    text = "\n".join(lines) + "\n"
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    if code:
        for line in lines:
            if line.startswith("error "):
                print(line[6:], file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
