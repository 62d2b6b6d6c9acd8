"""Command-line interface.

Exit codes: 0 success, 1 property violation (``verify``), 2 usage or input
errors, 3 enumeration threshold exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import kernels
from ._bits import fmt_set
from .automorphisms import (
    alpha_context,
    enumerate_involutory_automorphisms,
    inversion_automorphism,
    load_automorphism,
)
from .census import (
    CSV_COLUMNS,
    CSV_TIMING_COLUMNS,
    DEFAULT_CENSUS_MAX_ORDER,
    catalog,
    census_records,
    emit_report,
)
from .codes import (
    brute_force_codes,
    decide_subgroup_pc,
    decide_subgroup_tpc,
    is_perfect_code,
    is_total_perfect_code,
)
from .errors import GenCayleyError, GroupFileError, ThresholdError
from .graphs import build_graph, export_dot, validate_subset
from .groups import build_group, enumerate_subgroups, load_group_file, subgroup
from .verify import run_all

SET_LABELS = (
    ("omega", "loop set"),
    ("big_omega", "tau-fixed outside loop set"),
    ("mho", "tau-moved"),
    ("fix", "fixed points"),
    ("k_set", "alpha(g) = g^-1"),
)


def _resolve_group(args):
    if getattr(args, "group_file", None):
        if getattr(args, "group", None):
            raise GenCayleyError("pass either --group or --group-file, not both")
        return load_group_file(args.group_file)
    if not getattr(args, "group", None):
        raise GenCayleyError("a group is required (--group or --group-file)")
    return build_group(args.group)


def _resolve_alpha(args, group):
    spec = args.alpha
    if spec == "inv":
        auto, reason = inversion_automorphism(group)
        if auto is None:
            raise GenCayleyError(f"inversion is not usable here: {reason}")
        return auto
    if spec.isdigit():
        alphas = enumerate_involutory_automorphisms(group)
        idx = int(spec)
        if idx >= len(alphas):
            raise GenCayleyError(
                f"alpha index {idx} out of range; {group.id} has {len(alphas)}"
                " involutory automorphisms"
            )
        return alphas[idx]
    return load_automorphism(spec, group)


def _parse_elements(group, text: str) -> tuple[int, ...]:
    """Comma-separated element indices; names are accepted when defined."""
    if text.strip() == "":
        return ()
    out = []
    name_index = None
    for token in text.split(","):
        token = token.strip()
        if token.lstrip("-").isdigit():
            value = int(token)
        else:
            if name_index is None:
                name_index = (
                    {name: i for i, name in enumerate(group.names)}
                    if group.names is not None
                    else {}
                )
            if token not in name_index:
                raise GenCayleyError(f"unknown element {token!r} in {group.id}")
            value = name_index[token]
        if not 0 <= value < group.order:
            raise GenCayleyError(f"element {value} outside 0..{group.order - 1}")
        out.append(value)
    return tuple(sorted(set(out)))


def _write_out(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_group_list(args) -> int:
    for group in catalog(args.max_order):
        abelian = "abelian" if group.is_abelian else "nonabelian"
        print(f"{group.id} order={group.order} {abelian}")
    return 0


def cmd_group_describe(args) -> int:
    group = _resolve_group(args)
    print(f"group={group.id} order={group.order} abelian={str(group.is_abelian).lower()}")
    if group.names is not None:
        print("elements: " + " ".join(f"{i}={n}" for i, n in enumerate(group.names)))
    subs = enumerate_subgroups(group)
    print(f"subgroups: {len(subs)}")
    for sub in subs:
        print(f"  {fmt_set(sub.elements)}")
    return 0


def cmd_aut_list(args) -> int:
    group = _resolve_group(args)
    alphas = enumerate_involutory_automorphisms(group, include_identity=args.include_identity)
    print(f"group={group.id} involutory_automorphisms={len(alphas)}")
    for i, alpha in enumerate(alphas):
        print(f"alpha[{i}] perm={list(alpha.perm)}")
    return 0


def cmd_sets(args) -> int:
    group = _resolve_group(args)
    if args.alpha is not None:
        picks = [(args.alpha, _resolve_alpha(args, group))]
    else:
        picks = [
            (str(i), a)
            for i, a in enumerate(enumerate_involutory_automorphisms(group))
        ]
    print(f"group={group.id} order={group.order}")
    if not picks:
        print("no involutory automorphisms")
    for label, alpha in picks:
        ctx = alpha_context(group, alpha)
        print(f"alpha[{label}] perm={list(alpha.perm)}")
        for field_name, gloss in SET_LABELS:
            value = getattr(ctx, field_name)
            print(f"  {field_name:9} = {fmt_set(value)}  ({gloss})")
    return 0


def cmd_graph_build(args) -> int:
    group = _resolve_group(args)
    alpha = _resolve_alpha(args, group)
    ctx = alpha_context(group, alpha)
    subset = validate_subset(ctx, _parse_elements(group, args.S))
    graph = build_graph(subset)
    edges = graph.edges()
    print(
        f"group={group.id} alpha={args.alpha} S={fmt_set(subset.elements)}"
        f" regular={graph.degree} vertices={group.order} edges={len(edges)}"
    )
    print("edges: " + " ".join(fmt_set(e) for e in edges))
    if args.export_dot:
        with open(args.export_dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(graph))
        print(f"dot written to {args.export_dot}")
    return 0


def cmd_check(args) -> int:
    group = _resolve_group(args)
    alpha = _resolve_alpha(args, group)
    ctx = alpha_context(group, alpha)
    subset = validate_subset(ctx, _parse_elements(group, args.S))
    graph = build_graph(subset)
    x = _parse_elements(group, args.X)
    if args.kind == "pc":
        value = is_perfect_code(graph, x)
    else:
        value = is_total_perfect_code(graph, x)
    print(
        f"group={group.id} alpha={args.alpha} S={fmt_set(subset.elements)}"
        f" X={fmt_set(x)} kind={args.kind}"
    )
    print(f"result={str(value).lower()}")
    return 0


def cmd_decide(args) -> int:
    group = _resolve_group(args)
    alpha = _resolve_alpha(args, group)
    ctx = alpha_context(group, alpha)
    sub = subgroup(group, _parse_elements(group, args.subgroup))
    if args.kind == "pc":
        witness = decide_subgroup_pc(sub, ctx)
    else:
        witness = decide_subgroup_tpc(sub, ctx)
    print(
        f"group={group.id} alpha={args.alpha} subgroup={fmt_set(sub.elements)}"
        f" kind={args.kind}"
    )
    if witness.success:
        print(
            f"result=code witness={fmt_set(witness.subset.elements)}"
            f" witness_size={witness.subset.size}"
        )
    else:
        print(f"result=refuted reason={witness.refutation}")
    return 0


def cmd_enumerate_codes(args) -> int:
    group = _resolve_group(args)
    alpha = _resolve_alpha(args, group)
    ctx = alpha_context(group, alpha)
    subset = validate_subset(ctx, _parse_elements(group, args.S))
    graph = build_graph(subset)
    kind = "perfect" if args.kind == "pc" else "total"
    codes = brute_force_codes(graph, kind)
    print(
        f"group={group.id} alpha={args.alpha} S={fmt_set(subset.elements)}"
        f" kind={args.kind} codes={len(codes)}"
    )
    for code in codes:
        print(fmt_set(code))
    return 0


def cmd_census(args) -> int:
    records = census_records(args.max_order, workers=args.workers)
    text = emit_report(records, fmt=args.format, with_timings=args.timings)
    _write_out(args, text)
    if args.out:
        print(f"census: {len(records)} records written to {args.out}")
    return 0


def cmd_verify(args) -> int:
    results = run_all(max_order=args.max_order, seed=args.seed)
    failed = False
    for res in results:
        status = "ok" if res.ok else "FAIL"
        print(f"{status:4} {res.name} ({res.cases} cases)")
        if not res.ok:
            failed = True
            print(f"     counterexample: {res.violations[0]}")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def _add_group_args(p):
    p.add_argument("--group", help="catalog group spec, e.g. cyclic:6, D4, Z2xZ4")
    p.add_argument("--group-file", help="JSON group table file")


def _add_alpha_arg(p, required=True):
    p.add_argument(
        "--alpha",
        required=required,
        help="'inv' for inversion, an index into the involutory list, or a perm file",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencayley",
        description="Generalized Cayley graphs: build groups, inspect involutions, "
        "decide perfect and total perfect codes, sweep the catalog.",
        epilog="census CSV columns: "
        + ",".join(CSV_COLUMNS)
        + " (with --timings also "
        + ",".join(CSV_TIMING_COLUMNS)
        + ")",
    )
    parser.add_argument(
        "--version", action="version", version=f"gencayley 0.1.0 (kernels: {kernels.backend()})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="catalog groups")
    gsub = p.add_subparsers(dest="group_command", required=True)
    p_list = gsub.add_parser("list", help="list the catalog")
    p_list.add_argument("--max-order", type=int, default=DEFAULT_CENSUS_MAX_ORDER)
    p_list.set_defaults(func=cmd_group_list)
    p_desc = gsub.add_parser("describe", help="order, elements, subgroups")
    _add_group_args(p_desc)
    p_desc.set_defaults(func=cmd_group_describe)

    p = sub.add_parser("aut", help="automorphisms")
    asub = p.add_subparsers(dest="aut_command", required=True)
    p_alist = asub.add_parser("list", help="list involutory automorphisms")
    _add_group_args(p_alist)
    p_alist.add_argument("--include-identity", action="store_true")
    p_alist.set_defaults(func=cmd_aut_list)

    p = sub.add_parser("sets", help="derived element sets per involution")
    _add_group_args(p)
    _add_alpha_arg(p, required=False)
    p.set_defaults(func=cmd_sets, alpha=None)

    p = sub.add_parser("graph", help="graphs")
    gsub2 = p.add_subparsers(dest="graph_command", required=True)
    p_build = gsub2.add_parser("build", help="build a graph and print its edges")
    _add_group_args(p_build)
    _add_alpha_arg(p_build)
    p_build.add_argument("--S", required=True, help="connection set, comma-separated")
    p_build.add_argument("--export-dot", help="write DOT to this path")
    p_build.set_defaults(func=cmd_graph_build)

    p = sub.add_parser("check", help="test a given vertex set")
    p.add_argument("kind", choices=("pc", "tpc"))
    _add_group_args(p)
    _add_alpha_arg(p)
    p.add_argument("--S", required=True)
    p.add_argument("--X", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decide", help="decide a subgroup and construct a witness")
    p.add_argument("kind", choices=("pc", "tpc"))
    _add_group_args(p)
    _add_alpha_arg(p)
    p.add_argument("--subgroup", required=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", help="enumerations")
    esub = p.add_subparsers(dest="enumerate_command", required=True)
    p_codes = esub.add_parser("codes", help="all codes of a graph by brute force")
    _add_group_args(p_codes)
    _add_alpha_arg(p_codes)
    p_codes.add_argument("--S", required=True)
    p_codes.add_argument("--kind", choices=("pc", "tpc"), default="pc")
    p_codes.set_defaults(func=cmd_enumerate_codes)

    p = sub.add_parser("census", help="sweep the catalog and emit records")
    p.add_argument("--max-order", type=int, default=DEFAULT_CENSUS_MAX_ORDER)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument(
        "--timings",
        action="store_true",
        help="include per-decision milliseconds (reports stop being byte-reproducible)",
    )
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ThresholdError as exc:
        print(f"threshold exceeded: {exc}", file=sys.stderr)
        return 3
    except (GenCayleyError, GroupFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
