"""Command-line interface.

Every subcommand prints a deterministic text report; ``--json`` emits the
same verdicts machine-readably.  Exit codes: 0 success, 1 a checked property
is false, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from pbci import congruences as cg
from pbci import core, decomposition, embedding, filters, lattice, search
from pbci import structure as st
from pbci.core import Algebra, CapExceededError, FormatError

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2


def _load(path: str) -> Algebra:
    try:
        return core.load_algebra(path)
    except (FileNotFoundError, FormatError, ValueError) as exc:
        raise SystemExit(_input_error(f"{path}: {exc}"))


def _input_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _write_algebra(a: Algebra, out: str | None) -> None:
    text = core.format_algebra(a)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_payload(report: core.VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "violations": [
            {"law": v.law, "witness": list(v.witness)} for v in report.violations
        ],
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    a = _load(args.file)
    bci = core.check_pseudo_bci(a)
    bck = core.check_pseudo_bck(a)
    payload = {
        "pseudo_bci": _report_payload(bci),
        "pseudo_bck": _report_payload(bck),
    }
    lines = [
        f"pseudo-BCI: {bci.summary()}",
        f"pseudo-BCK: {bck.summary()}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if bci.passed else EXIT_PROPERTY


def cmd_info(args) -> int:
    a = _load(args.file)
    report = core.check_pseudo_bci(a)
    if not report.passed:
        print(f"not a pseudo-BCI-algebra: {report.summary()}", file=sys.stderr)
        return EXIT_PROPERTY
    order = core.derive_order(a)
    ipart = st.integral_part(a)
    gpart = st.group_part(a)
    gv = st.group_view(a)
    gm = st.gamma(a)
    dl = st.delta(a)
    payload = {
        "size": a.n,
        "unit": a.names[a.unit],
        "order_covers": [[a.names[x], a.names[y]] for x, y in order.cover_pairs()],
        "integral_part": sorted(a.names[i] for i in ipart),
        "group_part": sorted(a.names[i] for i in gpart),
        "gamma": {a.names[x]: a.names[gm.mapping[x]] for x in range(a.n)},
        "delta": {a.names[x]: a.names[dl.mapping[x]] for x in range(a.n)},
        "p_semisimple": st.is_p_semisimple(a),
        "group_table": [
            [a.names[gv.elements[v]] for v in row] for row in gv.mult
        ],
    }
    lines = [f"size: {a.n}", f"unit: {a.names[a.unit]}"]
    lines.append("order covers: " + (", ".join(
        f"{a.names[x]} < {a.names[y]}" for x, y in order.cover_pairs()) or "none"))
    lines.append("integral part: " + a.subset_names(ipart))
    lines.append("group part: " + a.subset_names(gpart))
    lines.append("x: gamma(x) delta(x)")
    for x in range(a.n):
        lines.append(f"  {a.names[x]}: {a.names[gm.mapping[x]]} "
                     f"{a.names[dl.mapping[x]]}")
    lines.append(f"p-semisimple: {st.is_p_semisimple(a)}")
    lines.append("group table of the group part:")
    for g, row in zip(gv.elements, gv.mult):
        lines.append("  " + a.names[g] + " | " +
                     " ".join(a.names[gv.elements[v]] for v in row))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_filters(args) -> int:
    a = _load(args.file)
    if args.generate:
        try:
            seed = {a.element(s.strip()) for s in args.generate.split(",")}
        except KeyError as exc:
            return _input_error(str(exc))
        if args.prefilters:
            result = filters.prefilter_generated(a, seed)
        else:
            result = filters.filter_generated(a, seed)
        payload = {"generated": sorted(a.names[i] for i in sorted(result))}
        _emit(args, payload, [a.subset_names(result)])
        return EXIT_OK
    family = filters.all_prefilters(a) if args.prefilters else filters.all_filters(a)
    payload = {
        "kind": "prefilters" if args.prefilters else "filters",
        "family": [sorted(a.names[i] for i in sorted(s)) for s in family],
    }
    _emit(args, payload, [a.subset_names(s) for s in family])
    return EXIT_OK


def _partition_text(a: Algebra, theta) -> str:
    return "{" + " | ".join(
        ",".join(a.names[i] for i in block) for block in theta.blocks()
    ) + "}"


def cmd_congruences(args) -> int:
    a = _load(args.file)
    if args.quotient:
        try:
            blocks = [
                [a.element(s.strip()) for s in part.split(",")]
                for part in args.quotient.split("/")
            ]
            theta = cg.Partition.from_blocks(a.n, blocks)
        except (KeyError, ValueError) as exc:
            return _input_error(str(exc))
        try:
            q = cg.quotient(a, theta)
        except ValueError as exc:
            print(f"incompatible partition: {exc}", file=sys.stderr)
            return EXIT_PROPERTY
        _write_algebra(q, args.out)
        return EXIT_OK
    family = (cg.all_relative_congruences(a) if args.relative
              else cg.all_congruences(a))
    payload = {
        "kind": "relative congruences" if args.relative else "congruences",
        "family": [[sorted(a.names[i] for i in block) for block in t.blocks()]
                   for t in family],
    }
    _emit(args, payload, [_partition_text(a, t) for t in family])
    return EXIT_OK


def cmd_lattice(args) -> int:
    a = _load(args.file)
    if args.kind in ("filters", "prefilters"):
        family = (filters.all_filters(a) if args.kind == "filters"
                  else filters.all_prefilters(a))
        lat = lattice.from_closed_family(
            family, labels=[a.subset_names(s) for s in family])
    else:
        thetas = cg.all_relative_congruences(a)
        lat = lattice.from_closed_family(
            [t.pair_set() for t in thetas],
            labels=[_partition_text(a, t) for t in thetas],
        )
    checks = (["modular", "distributive", "arguesian"]
              if args.check == "all" else [args.check])
    payload = {"kind": args.kind, "size": lat.m, "checks": {}}
    lines = [f"{args.kind} lattice: {lat.m} elements"]
    failed = False
    for name in checks:
        fn = {"modular": lattice.is_modular,
              "distributive": lattice.is_distributive,
              "arguesian": lattice.is_arguesian}[name]
        try:
            verdict, witness = fn(lat)
        except CapExceededError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PROPERTY
        payload["checks"][name] = {
            "holds": verdict,
            "witness": list(witness) if witness else None,
        }
        text = "holds" if verdict else f"fails at {witness}"
        lines.append(f"{name}: {text}")
        failed = failed or not verdict
    _emit(args, payload, lines)
    return EXIT_PROPERTY if failed else EXIT_OK


def cmd_embed(args) -> int:
    a = _load(args.file)
    try:
        report = embedding.embed(a)
    except CapExceededError as exc:
        print(f"excluded: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    check = embedding.check_residuated_pomonoid(report.structure)
    payload = {
        "word_monoid_size": report.monoid.m,
        "filter_structure_size": report.structure.n,
        "embedding": _report_payload(report.verification),
        "residuated_pomonoid": _report_payload(check),
        "integral": embedding.is_integral(report.structure),
        "images": {
            a.names[x]: report.structure.names[report.mapping[x]]
            for x in range(a.n)
        },
    }
    lines = [
        f"word monoid size: {report.monoid.m}",
        f"residuated structure size: {report.structure.n}",
        f"embedding: {report.verification.summary()}",
        f"residuated po-monoid axioms: {check.summary()}",
        f"integral: {embedding.is_integral(report.structure)}",
        "images:",
    ]
    for x in range(a.n):
        lines.append(f"  {a.names[x]} -> "
                     f"{report.structure.names[report.mapping[x]]}")
    if args.emit_monoid:
        monoid_doc = {
            "elements": [report.monoid.label(i) for i in range(report.monoid.m)],
            "unit": report.monoid.unit,
            "product": [list(row) for row in report.monoid.star],
        }
        with open(args.emit_monoid, "w", encoding="ascii") as fh:
            json.dump(monoid_doc, fh, indent=2)
    _emit(args, payload, lines)
    ok = report.verification.passed and check.passed
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_decompose(args) -> int:
    a = _load(args.file)
    report = decomposition.decompose(a)
    payload = {
        "conditions": report.conditions,
        "arrows_agree": report.arrows_agree,
        "agreement_witness": list(report.agreement_witness)
        if report.agreement_witness else None,
        "group_part_is_filter": report.g_is_filter,
        "decomposable": report.decomposable,
    }
    lines = ["condition                 verdict"]
    for name, verdict in report.conditions.items():
        lines.append(f"{name:<25} {verdict}")
    agreement = ("holds" if report.arrows_agree
                 else f"fails at {report.agreement_witness}")
    lines.append(f"{'mixed-arrow-agreement':<25} {agreement}")
    if report.g_is_filter:
        lines.append("group part is a filter")
    else:
        lines.append(f"group part not a filter ({report.filter_violation})")
    lines.append("decomposable: " + ("yes" if report.decomposable else "no"))
    _emit(args, payload, lines)
    return EXIT_OK if report.decomposable else EXIT_PROPERTY


def cmd_search(args) -> int:
    try:
        spec = search.SearchSpec(
            size=args.size,
            cls="pbck" if args.pbck else "pbci",
            predicate=args.predicate,
            limit=args.limit,
        )
    except (KeyError, ValueError) as exc:
        return _input_error(str(exc))
    try:
        models = list(search.enumerate_models(spec))
    except CapExceededError as exc:
        return _input_error(str(exc))
    names = []
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, a in enumerate(models):
            name = f"model_{i:04d}.alg"
            core.save_algebra(a, os.path.join(args.out, name))
            names.append(name)
        manifest = {
            "size": spec.size,
            "class": spec.cls,
            "predicate": spec.predicate,
            "limit": spec.limit,
            "count": len(models),
            "models": names,
        }
        with open(os.path.join(args.out, "manifest.json"), "w",
                  encoding="ascii") as fh:
            json.dump(manifest, fh, indent=2)
    payload = {"count": len(models), "models": names}
    lines = [f"{len(models)} model(s)"]
    lines.extend(names)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_iso(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    mapping = core.find_isomorphism(a, b)
    payload = {
        "isomorphic": mapping is not None,
        "mapping": {a.names[x]: b.names[mapping[x]] for x in range(a.n)}
        if mapping else None,
    }
    if mapping is None:
        _emit(args, payload, ["not isomorphic"])
        return EXIT_PROPERTY
    lines = [f"{a.names[x]} -> {b.names[mapping[x]]}" for x in range(a.n)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_product(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    try:
        _write_algebra(st.direct_product(a, b), args.out)
    except CapExceededError as exc:
        return _input_error(str(exc))
    return EXIT_OK


def cmd_union(args) -> int:
    b = _load(args.file_b)
    h = _load(args.file_h)
    try:
        _write_algebra(st.union_construction(b, h), args.out)
    except ValueError as exc:
        return _input_error(str(exc))
    return EXIT_OK


def cmd_dagger(args) -> int:
    a = _load(args.file)
    _write_algebra(a.dagger(), args.out)
    return EXIT_OK


def cmd_example(args) -> int:
    text = decomposition.builtin_example_text()
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbci",
        description="finite-model laboratory for pseudo-BCK/BCI-algebras",
    )
    parser.add_argument("--json", action="store_true",
                        help="emit a machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the axioms of an algebra file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("info", help="order, parts, homomorphisms, group table")
    p.add_argument("file")
    p.set_defaults(handler=cmd_info)

    p = sub.add_parser("filters", help="list filters (or prefilters)")
    p.add_argument("file")
    p.add_argument("--prefilters", action="store_true")
    p.add_argument("--generate", metavar="E1,E2,...",
                   help="closure of the given elements instead of the family")
    p.set_defaults(handler=cmd_filters)

    p = sub.add_parser("congruences", help="list (relative) congruences")
    p.add_argument("file")
    p.add_argument("--relative", action="store_true")
    p.add_argument("--quotient", metavar="BLOCKSPEC",
                   help="blocks like a,b/c,d: print the quotient algebra")
    p.add_argument("-o", "--out")
    p.set_defaults(handler=cmd_congruences)

    p = sub.add_parser("lattice", help="check lattice identities")
    p.add_argument("file")
    p.add_argument("--kind", required=True,
                   choices=["filters", "prefilters", "congruences"])
    p.add_argument("--check", default="all",
                   choices=["modular", "distributive", "arguesian", "all"])
    p.set_defaults(handler=cmd_lattice)

    p = sub.add_parser("embed", help="run the residuated po-monoid embedding")
    p.add_argument("file")
    p.add_argument("--emit-monoid", metavar="OUT")
    p.set_defaults(handler=cmd_embed)

    p = sub.add_parser("decompose", help="direct-product decomposition report")
    p.add_argument("file")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("search", help="enumerate models up to isomorphism")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--pbck", action="store_true")
    p.add_argument("--predicate", choices=sorted(search.PREDICATES))
    p.add_argument("--limit", type=int)
    p.add_argument("--out", metavar="DIR")
    p.set_defaults(handler=cmd_search)

    p = sub.add_parser("iso", help="search for an isomorphism between two files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("product", help="direct product of two algebra files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("-o", "--out")
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("union", help="glue a pseudo-BCK-algebra and a group "
                                     "algebra at the unit")
    p.add_argument("file_b")
    p.add_argument("file_h")
    p.add_argument("-o", "--out")
    p.set_defaults(handler=cmd_union)

    p = sub.add_parser("dagger", help="swap the two operation tables")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(handler=cmd_dagger)

    p = sub.add_parser("example", help="write the bundled 6-element example")
    p.add_argument("-o", "--out")
    p.set_defaults(handler=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
