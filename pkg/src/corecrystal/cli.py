"""Command-line entry point: ``corecrystal <command> ...``.

Exit status is 0 on success, 1 when the input lies outside an operation's
domain (with a one-line diagnostic on stderr) and 2 on usage errors.
"""

import argparse
import json
import sys

from . import abacus, corebij, counting, crystal, regular, rimhook
from .errors import DomainError, SizeLimitExceeded, require_modulus
from .partition import enumerate_partitions, format_partition, is_regular, parse_partition


def _partition_arg(text):
    try:
        return parse_partition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _modulus_arg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError("--l must be at least 2")
    return value


def _nonnegative_arg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


def _dump(data):
    return json.dumps(data, separators=(", ", ": "), ensure_ascii=False)


def _label(lam):
    return format_partition(lam) or "∅"


def _optional(predicate, lam, ell, minimum=3):
    return predicate(lam, ell) if ell >= minimum else None


# ---------------------------------------------------------------------------
# Commands


def cmd_classify(args):
    lam, ell = args.partition, args.l
    core, weight = rimhook.core_and_weight(lam, ell)
    return _dump(
        {
            "partition": list(lam),
            "l": ell,
            "core": list(core),
            "weight": weight,
            "regular": is_regular(lam, ell),
            "carter": rimhook.is_carter(lam, ell),
            "ell_partition": rimhook.is_ell_partition(lam, ell),
            "jm": _optional(rimhook.is_jm, lam, ell),
            "generalized": _optional(rimhook.is_generalized_ell, lam, ell),
            "L": _optional(rimhook.is_L_partition, lam, ell),
            "ladder_node": _optional(rimhook.is_ladder_node, lam, ell),
        }
    )


def crystal_dot(graph):
    name = f"{graph.variant}_l{graph.ell}_levels{graph.max_level}"
    lines = [f'digraph "{name}" {{']
    for lam in graph.nodes:
        lines.append(f'  "{_label(lam)}";')
    for src, dst, i in graph.edges:
        lines.append(f'  "{_label(src)}" -> "{_label(dst)}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def crystal_json(graph):
    index = graph.node_index()
    return _dump(
        {
            "variant": graph.variant,
            "l": graph.ell,
            "levels": graph.max_level,
            "nodes": [list(lam) for lam in graph.nodes],
            "edges": [[index[src], index[dst], i] for src, dst, i in graph.edges],
        }
    )


def cmd_crystal(args):
    graph = crystal.generate(args.variant, args.l, args.levels)
    return crystal_dot(graph) if args.format == "dot" else crystal_json(graph)


def bijection_report(lam, ell):
    """Every description of the core bijection, side by side."""
    by_abacus = corebij.phi(lam, ell)
    by_rows = corebij.phi_rows(lam, ell)
    vector = abacus.to_root_vector(lam, ell)
    image_vector = corebij.phi_geometric(vector)
    by_geometry = abacus.from_root_vector(image_vector) if ell > 2 else by_abacus
    report = {
        "partition": list(lam),
        "l": ell,
        "k": lam.part(1),
        "abacus": {"beads": abacus.abacus_json(lam, ell)["beads"], "image": list(by_abacus)},
        "rows": {
            "deleted_rows": [r for r in range(1, len(lam) + 1) if r not in _kept_rows(lam, ell)],
            "image": list(by_rows),
        },
        "geometry": {"vector": list(vector), "image_vector": list(image_vector), "image": list(by_geometry)},
        "word": None,
        "lm": None,
        "image": list(by_abacus),
        "agree": by_abacus == by_rows == by_geometry,
    }
    if ell >= 3:
        sub = corebij.phi_subexpression(lam, ell)
        report["word"] = {
            "word": str(sub.word),
            "length": len(sub.word),
            "kept_positions": [p + 1 for p in sub.kept_positions],
            "relabelled": str(sub.relabelled),
            "image_length": len(sub.relabelled),
            "image": list(by_abacus),
        }
        report["lm"] = {
            "rho": list(corebij.lm_rho(lam, ell)),
            "upsilon_rho": list(corebij.upsilon(corebij.lm_rho(lam, ell))),
            "rho_of_transposed_image": list(corebij.lm_rho(corebij.phi_transposed(lam, ell), ell - 1)),
            "commutes": corebij.verify_lm_diagram(lam, ell),
        }
    return report


def _kept_rows(lam, ell):
    if not lam:
        return set()
    hooks = abacus.beta_set(lam).positions
    return {r for r, h in enumerate(hooks, 1) if (h - hooks[0]) % ell}


def _show_text(report, view, lam, ell):
    if view == "abacus":
        return abacus.render_abacus(lam, ell) + f"\nimage: {_label(report['image'])}"
    if view == "rows":
        rows = ",".join(map(str, report["rows"]["deleted_rows"])) or "none"
        return f"deleted rows: {rows}\nimage: {_label(report['rows']['image'])}"
    if view == "geometry":
        g = report["geometry"]
        return f"vector: {tuple(g['vector'])}\nimage vector: {tuple(g['image_vector'])}\nimage: {_label(g['image'])}"
    if view == "word":
        w = report["word"]
        if w is None:
            raise DomainError("the word description needs l >= 3")
        return f"word: {w['word']}\nkept: {w['kept_positions']}\nrelabelled: {w['relabelled']}"
    m = report["lm"]
    if m is None:
        raise DomainError("the bounded-partition description needs l >= 3")
    return (
        f"rho: {_label(m['rho'])}\nupsilon(rho): {_label(m['upsilon_rho'])}\n"
        f"rho of transposed image: {_label(m['rho_of_transposed_image'])}\ncommutes: {str(m['commutes']).lower()}"
    )


def cmd_bij(args):
    lam, ell = args.partition, args.l
    if args.inverse:
        if args.k is None:
            raise _UsageError("--inverse needs --k")
        image = corebij.phi_inverse(lam, ell, args.k)
        return _dump({"partition": list(lam), "l": ell, "k": args.k, "preimage": list(image)})
    report = bijection_report(lam, ell)
    return _show_text(report, args.show, lam, ell) if args.show else _dump(report)


def _table(header, rows):
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)


def _witnesses(core, ell, weight, predicate):
    size = core.size + ell * weight
    cap = regular.default_size_cap()
    if size > cap:
        raise SizeLimitExceeded(f"witness search over partitions of {size} exceeds the cap {cap}")
    return [
        lam
        for lam in enumerate_partitions(size)
        if predicate(lam, ell) and rimhook.core_and_weight(lam, ell) == (core, weight)
    ]


def cmd_count(args):
    ell = args.l
    data = {"what": args.what, "l": ell}
    if args.core is None:
        if args.weight is not None or args.witnesses:
            raise _UsageError("--weight and --witnesses need --core")
        if args.what == "jm":
            raise _UsageError("--what jm needs --core")
        series = counting.core_gf(ell, args.upto) if args.what == "cores" else counting.lpartition_gf(ell, args.upto)
        rows = list(enumerate(series))
        header = ["k", "count"]
        data["coefficients"] = series.coeffs
    else:
        if args.what == "cores":
            raise _UsageError("--core applies to lpartitions and jm")
        count = counting.count_lpartitions_core_weight if args.what == "lpartitions" else counting.count_jm_core_weight
        weights = [args.weight] if args.weight is not None else range(args.upto + 1)
        rows = [(w, count(args.core, ell, w)) for w in weights]
        header = ["weight", "count"]
        data["core"] = list(args.core)
        data["counts"] = {str(w): c for w, c in rows}
        if args.witnesses:
            predicate = rimhook.is_ell_partition if args.what == "lpartitions" else rimhook.is_jm
            found = {w: _witnesses(args.core, ell, w, predicate) for w, _ in rows}
            data["witnesses"] = {str(w): [list(lam) for lam in found[w]] for w in found}
    if args.json:
        return _dump(data)
    text = _table(header, rows)
    if args.core is not None and args.witnesses:
        for w, found in data["witnesses"].items():
            text += f"\nweight {w}: " + "; ".join(_label(lam) for lam in found)
    return text


def cmd_reg(args):
    lam, ell = args.partition, args.l
    if args.op == "R":
        result = regular.regularize(lam, ell)
    else:
        require_modulus(ell, 3)
    if args.op == "S":
        result = regular.deregularize(lam, ell)
    elif args.op == "class":
        members = regular.regularization_class(lam, ell)
        if args.format == "json":
            return _dump({"partition": list(lam), "l": ell, "class": [list(m) for m in members]})
        return "\n".join(_label(m) for m in members)
    elif args.op == "lock":
        if args.format == "json":
            labels = regular.lock_labels(lam, ell)
            return _dump({"partition": list(lam), "l": ell, "labels": [[r, c, labels[(r, c)]] for r, c in lam.boxes()]})
        return regular.render_locks(lam, ell)
    if args.format == "json":
        return _dump({"partition": list(lam), "l": ell, "op": args.op, "result": list(result)})
    return _label(result)


def cmd_abacus(args):
    lam, ell = args.partition, args.l
    if args.show_abacus:
        return abacus.render_abacus(lam, ell)
    data = dict(abacus.abacus_json(lam, ell))
    data["partition"] = list(lam)
    data["balance"] = abacus.balance_number(abacus.abacus_of(lam, ell, len(data["beads"])))
    data["core"] = abacus.is_core(lam, ell)
    if data["core"]:
        data["root_vector"] = list(abacus.to_root_vector(lam, ell))
        data["n_vector"] = list(abacus.n_vector(lam, ell))
    return _dump(data)


# ---------------------------------------------------------------------------
# Parser


class _UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(prog="corecrystal", description="Partitions, cores, crystals and the core bijection.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, partition=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--l", type=_modulus_arg, required=True, help="modulus (at least 2)")
        if partition:
            p.add_argument("--partition", type=_partition_arg, required=True, help='e.g. "8,5,4,1" or "6,1^7"')
        p.set_defaults(func=func)
        return p

    command("classify", cmd_classify, "core, weight and class memberships as JSON")

    p = command("crystal", cmd_crystal, "generate a crystal graph", partition=False)
    p.add_argument("--variant", choices=[crystal.CLASSICAL, crystal.LADDER], default=crystal.CLASSICAL)
    p.add_argument("--levels", type=_nonnegative_arg, required=True)
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = command("bij", cmd_bij, "the core bijection in all its descriptions")
    p.add_argument("--inverse", action="store_true", help="treat --partition as an (l-1)-core and invert")
    p.add_argument("--k", type=_nonnegative_arg, help="first part of the preimage (with --inverse)")
    p.add_argument("--show", choices=["abacus", "rows", "geometry", "word", "lm"])

    p = command("count", cmd_count, "generating-function coefficients and fixed-core counts", partition=False)
    p.add_argument("--what", choices=["cores", "lpartitions", "jm"], required=True)
    p.add_argument("--upto", type=_nonnegative_arg, default=10)
    p.add_argument("--core", type=_partition_arg)
    p.add_argument("--weight", type=_nonnegative_arg)
    p.add_argument("--witnesses", action="store_true", help="list the partitions being counted")
    p.add_argument("--json", action="store_true")

    p = command("reg", cmd_reg, "regularize, deregularize, classes and locked boxes")
    p.add_argument("--op", choices=["R", "S", "class", "lock"], required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = command("abacus", cmd_abacus, "beads, balance and root-lattice coordinates")
    p.add_argument("--show-abacus", action="store_true", help="draw the abacus as text")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        output = args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"corecrystal: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"corecrystal: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
