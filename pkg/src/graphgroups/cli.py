"""Batch command-line front end.

Verbs mirror the library: ``graph`` for constructions and embedding search,
``word`` for group-word operations, ``group`` for cyclic reduction, pure
factors and centralizer witnesses, ``monoid`` for the trace operations,
``search phi`` for bounded realizability, ``conceal`` for the concealment
construction. Exit codes: 0 success/found/true, 1 exhausted/none/false,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import conceal as conceal_mod
from . import raag, trace
from .commgraph import commutation_graph, phi_search
from .graphs import (
    ParseError,
    co_components,
    complement,
    connected_product,
    find_embedding,
    format_graph,
    parse_graph,
    resolve_name_collisions,
)
from .raag import GroupElement
from .trace import Word


def _load_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", path) from exc
    return parse_graph(text, filename=path)


def _parse_word(graph, text, monoid=False):
    word = Word.parse(graph, text)
    if monoid and not word.is_positive:
        raise ValueError(f"inverse letters not allowed in a monoid word: {text!r}")
    return word


def _bool_exit(value):
    print("true" if value else "false")
    return 0 if value else 1


# -- graph commands -----------------------------------------------------


def cmd_graph_info(args):
    g = _load_graph(args.graph)
    print(f"vertices {len(g)}: " + " ".join(g.vertices))
    print(f"edges {g.edge_count}: " + " ".join(f"{u}-{v}" for u, v in g.edges()))
    print("degrees: " + " ".join(f"{v}={g.degree(v)}" for v in g.vertices))
    blocks = " ".join("{" + ",".join(b) + "}" for b in co_components(g))
    print(f"co-components: {blocks}")
    return 0


def cmd_graph_complement(args):
    print(format_graph(complement(_load_graph(args.graph))), end="")
    return 0


def cmd_graph_product(args):
    g = _load_graph(args.left)
    h = _load_graph(args.right)
    _, renaming = resolve_name_collisions(g, h)
    for old, new in sorted(renaming.items()):
        print(f"# renamed {old} -> {new}")
    print(format_graph(connected_product(g, h)), end="")
    return 0


def cmd_graph_embed(args):
    pattern = _load_graph(args.pattern)
    host = _load_graph(args.host)
    witness = find_embedding(pattern, host)
    if witness is None:
        print("none")
        return 1
    for v in pattern.vertices:
        print(f"{v} -> {witness[v]}")
    return 0


# -- word (group) commands ------------------------------------------------


def cmd_word_reduce(args):
    g = _load_graph(args.graph)
    print(raag.group_reduce(_parse_word(g, args.word)))
    return 0


def cmd_word_normal_form(args):
    g = _load_graph(args.graph)
    print(GroupElement(g, _parse_word(g, args.word).letters))
    return 0


def cmd_word_equal(args):
    g = _load_graph(args.graph)
    return _bool_exit(
        raag.group_equal(_parse_word(g, args.left), _parse_word(g, args.right))
    )


def cmd_word_commute(args):
    g = _load_graph(args.graph)
    return _bool_exit(
        raag.group_commute(_parse_word(g, args.left), _parse_word(g, args.right))
    )


# -- group commands --------------------------------------------------------


def cmd_group_cyclic_reduce(args):
    g = _load_graph(args.graph)
    decomposition = raag.cyclic_reduce(_parse_word(g, args.word))
    print(f"p = {decomposition.p}")
    print(f"h = {decomposition.h}")
    return 0


def cmd_group_pure_factors(args):
    g = _load_graph(args.graph)
    factorization = raag.pure_factors(_parse_word(g, args.word))
    print(f"factors {len(factorization.factors)}")
    for base_element, exponent in factorization.factors:
        print(f"factor {exponent} {base_element}")
    return 0


def cmd_group_centralizer(args):
    g = _load_graph(args.graph)
    outcome = raag.centralizer_witness(
        _parse_word(g, args.left), _parse_word(g, args.right)
    )
    print(f"status={outcome.status}")
    if not outcome.found:
        print(f"bound={outcome.bound}")
        return 1
    w = outcome.witness
    print(f"p = {w.p}")
    for (root, _), c in zip(outcome.factorization.factors, w.exponents):
        print(f"k1 {c} {root}")
    print(f"k2 = {w.k2}")
    return 0


# -- monoid commands ---------------------------------------------------------


def cmd_monoid_equal(args):
    g = _load_graph(args.graph)
    return _bool_exit(
        trace.trace_equal(
            _parse_word(g, args.left, monoid=True),
            _parse_word(g, args.right, monoid=True),
        )
    )


def cmd_monoid_commute(args):
    g = _load_graph(args.graph)
    return _bool_exit(
        trace.trace_commute(
            _parse_word(g, args.left, monoid=True),
            _parse_word(g, args.right, monoid=True),
        )
    )


def cmd_monoid_root(args):
    g = _load_graph(args.graph)
    root, exponent = trace.primitive_root(_parse_word(g, args.word, monoid=True))
    print(f"root = {root}")
    print(f"exponent = {exponent}")
    return 0


def cmd_monoid_product_embed(args):
    g = _load_graph(args.graph)
    table = trace.embed_into_product(g)
    words = [(text, _parse_word(g, text, monoid=True)) for text in args.words]
    print(f"rank1 = {table.rank1_count}")
    print(f"rank2 = {table.rank2_count}")
    for v in table.rho_coords:
        print(f"rho {v}")
    for x, y in table.sigma_coords:
        print(f"sigma {x} {y}")
    for text, word in words:
        coords = table.evaluate(word)
        counts = coords[: table.rank1_count]
        subsequences = coords[table.rank1_count :]
        parts = [
            f"rho({v})={c}" for v, c in zip(table.rho_coords, counts)
        ] + [
            f"sigma({x},{y})={'.'.join(seq) if seq else '-'}"
            for (x, y), seq in zip(table.sigma_coords, subsequences)
        ]
        print(f"coords {text}: " + " ".join(parts))
    return 0


def cmd_monoid_comm_rank(args):
    g = _load_graph(args.graph)
    print(trace.max_free_commutative_rank(g))
    return 0


# -- search -------------------------------------------------------------------


def cmd_search_phi(args):
    target = _load_graph(args.target)
    ambient = _load_graph(args.ambient)
    if args.max_len < 1:
        raise ValueError("--max-len must be >= 1")
    report = phi_search(
        target,
        ambient,
        args.mode,
        args.max_len,
        strict=args.strict,
        jobs=args.jobs,
    )
    if args.format == "records":
        print(report.serialize(), end="")
    else:
        print(f"status={report.status} bound={report.bound}")
        if report.witness is not None:
            for v in target.vertices:
                print(f"witness {v}={report.witness[v]}")
        print(f"candidates={report.candidates}")
    return 0 if report.found else 1


# -- conceal --------------------------------------------------------------------


def cmd_conceal_check(args):
    g = _load_graph(args.graph)
    report = conceal_mod.eligible(g)
    print("eligible" if report.eligible else "ineligible")
    for line in report.diagnostics:
        print(f"# {line}")
    return 0 if report.eligible else 1


def cmd_conceal_build(args):
    g = _load_graph(args.graph)
    result = conceal_mod.build_concealment(g)
    print(result.serialize(), end="")
    return 0


def cmd_conceal_verify(args):
    g = _load_graph(args.graph)
    result = conceal_mod.build_concealment(g)
    ok = True

    no_embed = conceal_mod.verify_no_embedding(result)
    ok &= no_embed
    print(f"no-embedding: {'ok' if no_embed else 'FAILED'}")

    family = conceal_mod.monoid_phi_witness(result)
    cg = commutation_graph(family)
    gverts = result.gamma.vertices
    names = cg.vertices
    matches = all(
        cg.adjacent(names[i], names[j]) == result.gamma.adjacent(gverts[i], gverts[j])
        for i in range(len(gverts))
        for j in range(i + 1, len(gverts))
    )
    ok &= matches
    print(f"phi-witness: {'ok' if matches else 'FAILED'}")

    report = conceal_mod.verify_tau_injective(result, args.max_len, jobs=args.jobs)
    morphism_ok = not report.morphism_failures
    ok &= morphism_ok
    print(f"tau-morphism: {'ok' if morphism_ok else 'FAILED'}")
    injective_ok = not report.collisions
    ok &= injective_ok
    print(
        f"tau-injective: {'ok' if injective_ok else 'FAILED'} "
        f"(bound={report.bound}, elements={report.element_count})"
    )
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ggm",
        description="Graph monoid and graph group toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="graph constructions and queries")
    graph_sub = graph.add_subparsers(dest="subcommand", required=True)
    p = graph_sub.add_parser("info", help="summary of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_graph_info)
    p = graph_sub.add_parser("complement", help="complement graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_graph_complement)
    p = graph_sub.add_parser("product", help="connected product of two graphs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_graph_product)
    p = graph_sub.add_parser("embed", help="induced-subgraph embedding search")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.set_defaults(func=cmd_graph_embed)

    word = sub.add_parser("word", help="group-word operations")
    word_sub = word.add_subparsers(dest="subcommand", required=True)
    p = word_sub.add_parser("reduce", help="canonical geodesic form")
    p.add_argument("--graph", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_word_reduce)
    p = word_sub.add_parser("normal-form", help="canonical form of a word")
    p.add_argument("--graph", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_word_normal_form)
    p = word_sub.add_parser("equal", help="group equality")
    p.add_argument("--graph", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_word_equal)
    p = word_sub.add_parser("commute", help="group commutation")
    p.add_argument("--graph", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_word_commute)

    group = sub.add_parser("group", help="group structure operations")
    group_sub = group.add_subparsers(dest="subcommand", required=True)
    p = group_sub.add_parser("cyclic-reduce", help="p h p^-1 decomposition")
    p.add_argument("--graph", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_group_cyclic_reduce)
    p = group_sub.add_parser("pure-factors", help="pure factors of a cyclically reduced element")
    p.add_argument("--graph", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_group_pure_factors)
    p = group_sub.add_parser("centralizer", help="bounded centralizer witness search")
    p.add_argument("--graph", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_group_centralizer)

    monoid = sub.add_parser("monoid", help="trace monoid operations")
    monoid_sub = monoid.add_subparsers(dest="subcommand", required=True)
    p = monoid_sub.add_parser("equal", help="projection-based equality")
    p.add_argument("--graph", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_monoid_equal)
    p = monoid_sub.add_parser("commute", help="monoid commutation")
    p.add_argument("--graph", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_monoid_commute)
    p = monoid_sub.add_parser("root", help="primitive root and exponent")
    p.add_argument("--graph", required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_monoid_root)
    p = monoid_sub.add_parser("product-embed", help="free-product embedding table")
    p.add_argument("--graph", required=True)
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_monoid_product_embed)
    p = monoid_sub.add_parser("comm-rank", help="largest free commutative rank")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_monoid_comm_rank)

    search = sub.add_parser("search", help="bounded realizability search")
    search_sub = search.add_subparsers(dest="subcommand", required=True)
    p = search_sub.add_parser("phi", help="realize a target commutation graph")
    p.add_argument("--target", required=True)
    p.add_argument("--ambient", required=True)
    p.add_argument("--mode", choices=("monoid", "group"), required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="require pairwise-distinct elements")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_search_phi)

    con = sub.add_parser("conceal", help="concealment construction")
    con_sub = con.add_subparsers(dest="subcommand", required=True)
    p = con_sub.add_parser("check", help="eligibility with diagnostics")
    p.add_argument("graph")
    p.set_defaults(func=cmd_conceal_check)
    p = con_sub.add_parser("build", help="build and print the concealment")
    p.add_argument("graph")
    p.set_defaults(func=cmd_conceal_build)
    p = con_sub.add_parser("verify", help="run all concealment checks")
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_conceal_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())
