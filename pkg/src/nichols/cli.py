"""Command-line surface: dimensions, oracle queries, graphs, checks, bases.

Every command prints a JSON document (deterministic: sorted keys, no
timestamps); ``--table`` switches the two sweep commands to an aligned
human-readable table.  Exit codes: 0 on success, 1 when a verification
sweep reports violations (or the dimension recursions disagree with the
census), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .braiding import BraidingMatrix, CartanSpec
from .freealg import NCPolynomial
from .graphs import aug_graph, component_decomposition, pure_graph
from .oracle import (DEFAULT_DEGREE_CAP, dim_component, get_oracle, in_L)
from .rootdims import (count_connected_oracle, dim_L_closed, dim_L_recursive,
                       dimension_report, enumerate_pbw_basis)
from .scalars import RootFraction
from .structure import (decide_lie_variants_coincide, decide_minus_lie_complement,
                        quantum_linear_rank2_basis, verify_connectivity_criterion,
                        verify_disconnected_brackets_vanish)

__all__ = ["RunConfig", "main"]

# Rank windows per type for sweep commands: (lowest, highest or None).
_TYPE_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E6": (6, 6),
    "G2": (2, 2),
}

# The fixed grid behind the errata report: every covered type at small
# ranks, parameter orders 2..5 (2..7 for G2 so both divisibility branches
# of its closed form appear several times).
_ERRATA_GRID = (
    ("A", (1, 5), (2, 5)),
    ("B", (2, 4), (2, 5)),
    ("C", (3, 4), (2, 5)),
    ("D", (4, 5), (2, 5)),
    ("E6", (6, 6), (2, 5)),
    ("G2", (2, 2), (2, 7)),
)


@dataclass(frozen=True)
class RunConfig:
    """Validated inputs of one CLI invocation."""

    command: str
    subcommand: str | None
    matrix: BraidingMatrix | None
    cartan: CartanSpec | None
    word: tuple | None
    variant: str | None
    method: str | None
    max_len: int | None
    degree_cap: int | None
    cap: int | None
    types: tuple
    max_rank: int | None
    max_n: int | None
    out: str | None
    table: bool

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        matrix = None
        if getattr(args, "matrix", None):
            matrix = _load_matrix(args.matrix)
        cartan = None
        if getattr(args, "type", None) is not None and not isinstance(args.type, list):
            cartan = CartanSpec(args.type, args.rank,
                                RootFraction.parse(args.q))
        if matrix is not None and cartan is not None:
            raise ValueError("give either --matrix or --type/--rank/--q, not both")
        word = None
        if getattr(args, "word", None) is not None:
            if matrix is None:
                raise ValueError("--word needs a --matrix to interpret letters")
            word = _parse_word(args.word, matrix.n)
        for cap_name in ("max_len", "degree_cap", "cap", "max_rank"):
            value = getattr(args, cap_name, None)
            if value is not None and value < 1:
                raise ValueError(f"--{cap_name.replace('_', '-')} must be positive")
        max_n = getattr(args, "max_N", None)
        if max_n is not None and max_n < 2:
            raise ValueError("--max-N must be at least 2")
        types = getattr(args, "type", None) if isinstance(getattr(args, "type", None), list) else None
        return cls(
            command=args.command,
            subcommand=getattr(args, "subcommand", None),
            matrix=matrix,
            cartan=cartan,
            word=word,
            variant=getattr(args, "variant", None),
            method=getattr(args, "method", None),
            max_len=getattr(args, "max_len", None),
            degree_cap=getattr(args, "degree_cap", None),
            cap=getattr(args, "cap", None),
            types=tuple(types) if types else (),
            max_rank=getattr(args, "max_rank", None),
            max_n=max_n,
            out=getattr(args, "out", None) or getattr(args, "errata_out", None),
            table=getattr(args, "table", False),
        )


def _load_matrix(path: str) -> BraidingMatrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as err:
        raise ValueError(f"cannot read matrix file {path}: {err}")
    except json.JSONDecodeError as err:
        raise ValueError(f"matrix file {path} is not valid JSON: {err}")
    return BraidingMatrix.from_json(data)


def _parse_word(text: str, rank: int) -> tuple:
    letters = []
    for pos, token in enumerate(text.split(), start=1):
        try:
            letter = int(token)
        except ValueError:
            raise ValueError(f"word position {pos}: {token!r} is not an integer")
        if not 1 <= letter <= rank:
            raise ValueError(f"word position {pos}: letter {letter} outside 1..{rank}")
        letters.append(letter)
    return tuple(letters)


def _cartan_grid(types, max_rank, max_n):
    """Deterministic (spec, ...) iteration for sweep commands."""
    chosen = types or tuple(_TYPE_RANKS)
    for letter in ("A", "B", "C", "D", "E6", "G2"):
        if letter not in chosen:
            continue
        lo, hi = _TYPE_RANKS[letter]
        top = min(max_rank, hi) if hi is not None else max_rank
        for rank in range(lo, top + 1):
            for order in range(2, max_n + 1):
                yield CartanSpec(letter, rank, RootFraction(1, order))


# ---------------------------------------------------------------------------
# Command handlers: each returns (payload, exit_code, table_lines | None)


def _cmd_dim(config: RunConfig):
    methods = {
        "recursive": dim_L_recursive,
        "closed": dim_L_closed,
        "oracle": count_connected_oracle,
    }
    value = methods[config.method](config.cartan)
    return value, 0, None


def _verify_rows(specs):
    rows = [dimension_report(spec) for spec in specs]
    entries = [row for row in rows if row["closed"] != row["oracle"]]
    broken = [row for row in rows if row["recursive"] != row["oracle"]]
    return rows, entries, broken


def _rows_table(rows):
    header = f'{"type":<5}{"rank":>5}{"N":>4}{"closed":>18}{"recursive":>18}{"oracle":>18}  agree'
    lines = [header]
    for row in rows:
        lines.append(f'{row["type"]:<5}{row["rank"]:>5}{row["N"]:>4}'
                     f'{row["closed"]:>18}{row["recursive"]:>18}{row["oracle"]:>18}'
                     f'  {"yes" if row["agree"] else "NO"}')
    return lines


def _cmd_dim_verify(config: RunConfig):
    specs = list(_cartan_grid(config.types, config.max_rank, config.max_n))
    rows, entries, broken = _verify_rows(specs)
    if config.out:
        grid = []
        for letter, (lo, hi) in _TYPE_RANKS.items():
            if config.types and letter not in config.types:
                continue
            top = min(config.max_rank, hi) if hi is not None else config.max_rank
            if top >= lo:
                grid.append((letter, (lo, top), (2, config.max_n)))
        _write_errata(config.out, entries, grid)
    payload = {"rows": rows, "errata": entries}
    return payload, (1 if broken else 0), _rows_table(rows)


def _write_errata(path, entries, grid):
    document = {
        "checked": [{"type": letter, "ranks": list(ranks), "orders": list(orders)}
                    for letter, ranks, orders in grid],
        "entries": entries,
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _cmd_errata(config: RunConfig):
    specs = []
    for letter, (lo, hi), (n_lo, n_hi) in _ERRATA_GRID:
        for rank in range(lo, hi + 1):
            for order in range(n_lo, n_hi + 1):
                specs.append(CartanSpec(letter, rank, RootFraction(1, order)))
    rows, entries, broken = _verify_rows(specs)
    if config.out:
        _write_errata(config.out, entries, _ERRATA_GRID)
    payload = {
        "checked": [{"type": letter, "ranks": list(ranks), "orders": list(orders)}
                    for letter, ranks, orders in _ERRATA_GRID],
        "entries": entries,
    }
    return payload, (1 if broken else 0), _rows_table(entries)


def _cmd_oracle(config: RunConfig):
    matrix = config.matrix
    if config.subcommand == "is-zero":
        poly = NCPolynomial.from_word(config.word, matrix.n)
        return {"result": get_oracle(matrix).is_zero(poly)}, 0, None
    if config.subcommand == "in-l":
        cap = config.cap if config.cap is not None else DEFAULT_DEGREE_CAP
        return {"result": in_L(config.word, matrix, config.variant, cap)}, 0, None
    degree = config.degree_cap
    return {"result": dim_component(matrix, degree)}, 0, None


def _cmd_graph(config: RunConfig):
    matrix = config.matrix
    if config.subcommand in ("pure", "aug"):
        graph = pure_graph(matrix) if config.subcommand == "pure" else aug_graph(matrix)
        edges = sorted(list(edge) for edge in graph.edges)
        return {"n": matrix.n, "edges": edges}, 0, None
    if config.word is not None:
        scalar, factors = component_decomposition(config.word, matrix)
        return {
            "scalar": scalar.text(),
            "factors": [" ".join(str(letter) for letter in factor)
                        for factor in factors],
        }, 0, None
    components = pure_graph(matrix).components()
    return {"components": [list(comp) for comp in components]}, 0, None


def _cmd_check(config: RunConfig):
    matrix = config.matrix
    if config.subcommand == "prop63":
        return {"result": decide_lie_variants_coincide(matrix)}, 0, None
    if config.subcommand == "prop64":
        return {"result": decide_minus_lie_complement(matrix)}, 0, None
    if config.subcommand == "cor25":
        max_len = config.max_len if config.max_len is not None else 4
        report = verify_connectivity_criterion(matrix, max_len=max_len)
    else:
        max_len = config.max_len if config.max_len is not None else 5
        report = verify_disconnected_brackets_vanish(matrix, max_len=max_len)
    return report.to_json(), (0 if report.ok else 1), None


def _cmd_basis(config: RunConfig):
    if config.subcommand == "lminus-rank2":
        cap = config.degree_cap if config.degree_cap is not None else 10
        basis = quantum_linear_rank2_basis(config.matrix, degree_cap=cap)
        words = [" ".join(["2"] * a2 + ["1"] * a1) for a2, a1 in basis.pairs]
        return {
            "pairs": [list(pair) for pair in basis.pairs],
            "words": words,
            "truncated": basis.truncated,
        }, 0, None
    source = config.matrix if config.matrix is not None else config.cartan
    if source is None:
        raise ValueError("basis pbw needs --matrix or --type/--rank/--q")
    monomials = enumerate_pbw_basis(source, degree_cap=config.degree_cap)
    return {
        "count": len(monomials),
        "monomials": [monomial.to_json() for monomial in monomials],
    }, 0, None


# ---------------------------------------------------------------------------
# Parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nichols",
        description="Exact computations in diagonally braided Nichols algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix(p):
        p.add_argument("--matrix", required=True,
                       help="path to a braiding matrix JSON file")

    def add_table(p):
        p.add_argument("--table", action="store_true",
                       help="human-readable table instead of JSON")

    p_dim = sub.add_parser("dim", help="dimension of the braided Lie algebra")
    p_dim.add_argument("--type", required=True, choices=sorted(_TYPE_RANKS))
    p_dim.add_argument("--rank", required=True, type=int)
    p_dim.add_argument("--q", required=True,
                       help="base parameter as a turn fraction, e.g. 1/2 for -1")
    p_dim.add_argument("--method", choices=("recursive", "closed", "oracle"),
                       default="recursive")

    p_ver = sub.add_parser("dim-verify",
                           help="compare closed, recursive and census dimensions")
    p_ver.add_argument("--type", action="append", choices=sorted(_TYPE_RANKS),
                       help="restrict to a type (repeatable; default all)")
    p_ver.add_argument("--max-rank", type=int, default=5)
    p_ver.add_argument("--max-N", type=int, default=5)
    p_ver.add_argument("--errata-out", help="also write the mismatch report here")
    add_table(p_ver)

    p_err = sub.add_parser("errata",
                           help="closed-form mismatch report over the fixed grid")
    p_err.add_argument("--out", help="write the report to this file as well")
    add_table(p_err)

    p_oracle = sub.add_parser("oracle", help="skew-derivation pairing queries")
    oracle_sub = p_oracle.add_subparsers(dest="subcommand", required=True)
    p_zero = oracle_sub.add_parser("is-zero", help="does the word vanish in the quotient")
    add_matrix(p_zero)
    p_zero.add_argument("--word", required=True, help="letters, e.g. \"1 2 1\"")
    p_inl = oracle_sub.add_parser("in-l", help="membership in a bracket subspace")
    add_matrix(p_inl)
    p_inl.add_argument("--word", required=True)
    p_inl.add_argument("--variant", choices=("braided", "minus"), default="braided")
    p_inl.add_argument("--cap", type=int, help="degree cap for the span search")
    p_comp = oracle_sub.add_parser("dim-component", help="graded component dimension")
    add_matrix(p_comp)
    p_comp.add_argument("--degree", dest="degree_cap", required=True, type=int,
                        help="total degree of the component")

    p_graph = sub.add_parser("graph", help="diagram graphs of a braiding matrix")
    graph_sub = p_graph.add_subparsers(dest="subcommand", required=True)
    for name, blurb in (("pure", "edges where q_ij q_ji != 1"),
                        ("aug", "edges where q_ij != 1 or q_ji != 1")):
        p_g = graph_sub.add_parser(name, help=blurb)
        add_matrix(p_g)
    p_gc = graph_sub.add_parser("components",
                                help="pure-graph components, or a word's factorization")
    add_matrix(p_gc)
    p_gc.add_argument("--word", help="regroup this word by component")

    p_check = sub.add_parser("check", help="decision procedures and sweeps")
    check_sub = p_check.add_subparsers(dest="subcommand", required=True)
    for name, blurb in (("prop63", "do the two bracket variants span the same space"),
                        ("prop64", "complement criterion for the plain-bracket algebra")):
        p_c = check_sub.add_parser(name, help=blurb)
        add_matrix(p_c)
    for name, blurb, default in (
            ("cor25", "connectivity vs bracket membership sweep", 4),
            ("prop65", "disconnected bracketings vanish sweep", 5)):
        p_c = check_sub.add_parser(name, help=blurb)
        add_matrix(p_c)
        p_c.add_argument("--max-len", type=int, default=default,
                         help=f"word length cap (default {default})")

    p_basis = sub.add_parser("basis", help="basis enumerations")
    basis_sub = p_basis.add_subparsers(dest="subcommand", required=True)
    p_b2 = basis_sub.add_parser("lminus-rank2",
                                help="plain-bracket basis of a rank-2 quantum linear matrix")
    add_matrix(p_b2)
    p_b2.add_argument("--degree-cap", dest="degree_cap", type=int,
                      help="cap per exponent when a diagonal entry is 1 (default 10)")
    p_pbw = basis_sub.add_parser("pbw", help="connected-support power monomials")
    p_pbw.add_argument("--matrix", help="quantum linear matrix JSON file")
    p_pbw.add_argument("--type", choices=sorted(_TYPE_RANKS))
    p_pbw.add_argument("--rank", type=int)
    p_pbw.add_argument("--q", help="turn fraction, with --type/--rank")
    p_pbw.add_argument("--degree-cap", dest="degree_cap", type=int)

    return parser


_HANDLERS = {
    "dim": _cmd_dim,
    "dim-verify": _cmd_dim_verify,
    "errata": _cmd_errata,
    "oracle": _cmd_oracle,
    "graph": _cmd_graph,
    "check": _cmd_check,
    "basis": _cmd_basis,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "basis" and args.subcommand == "pbw":
        given = [flag for flag in ("type", "rank", "q") if getattr(args, flag) is not None]
        if given and len(given) != 3:
            parser.error("--type/--rank/--q must be given together")
    try:
        config = RunConfig.from_args(args)
        payload, code, table_lines = _HANDLERS[args.command](config)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if config.table and table_lines is not None:
        print("\n".join(table_lines))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
