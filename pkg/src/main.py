"""
Lyndon Parity Toolkit
=====================
Command-line entry point for words, permutations, the parity bijection and
the exhaustive verification harness.

Usage:
    python -m src.main psi --trace dadccdbccc         # trace Psi
    python -m src.main fs --set 4,7 75218634 --trace  # trace f_S
    python -m src.main verify-counts --n 8            # counting theorems
    python -m src.main serve                          # start API server

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.bijection.parity import classify_word, omega_trace, psi_trace
from src.bijection.permutation_map import FsComputation, f_s_inverse_trace, f_s_trace
from src.config import Config, get_config
from src.errors import CombinatoricsError
from src.harness.bijectivity import (
    verify_bona_bijection,
    verify_fs_bijectivity,
    verify_hat_conjugation,
    verify_necklace_counts,
    verify_necklace_roundtrips,
)
from src.harness.counts import verify_theorem_counts
from src.necklaces.maps import SubsetS, parse_necklaces, phi, phi_inv, xi, xi_inv
from src.perms.maps import bona_map, foata_hat, foata_hat_inverse
from src.perms.permutation import Permutation, format_permutation, parse_permutation
from src.series.identities import verify_gf_identity, verify_parity_series, verify_substitution_symmetry
from src.words.core import INFINITY, Alphabet, format_word, parse_word
from src.words.lyndon import isf, lyndon_factorize, standard_factorization


logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """What a subcommand prints: text for humans, records for machines."""
    text: str
    records: Any
    ok: bool = True


@dataclass
class Context:
    config: Config
    alphabet: Optional[Alphabet]
    args: argparse.Namespace = field(repr=False)

    def word(self, text: str):
        return parse_word(text, self.alphabet, self.config.output.empty_word)

    def show(self, word) -> str:
        return format_word(word, self.config.output.empty_word)


def setup_logging(config: Config, verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else config.logging.level,
        format=config.logging.format,
    )


def _permutation(tokens: List[str]) -> Permutation:
    return parse_permutation(" ".join(tokens))


def _perm_text(pi: Permutation) -> str:
    return f"{format_permutation(pi, 'one-line')}  {format_permutation(pi, 'cycles')}"


# ═══════════════════════════════════════════════════════════════════════════
#                              WORD COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_factorize(ctx: Context) -> CommandResult:
    word = ctx.word(ctx.args.word)
    factorization = lyndon_factorize(word)
    return CommandResult(
        factorization.render(ctx.config.output.factor_bar),
        {
            "word": ctx.show(word),
            "factors": [ctx.show(f) for f in factorization],
            "starts": factorization.starts,
            "lengths": factorization.lengths,
        },
    )


def cmd_stdfact(ctx: Context) -> CommandResult:
    word = ctx.word(ctx.args.word)
    std = standard_factorization(word)
    return CommandResult(
        std.render(ctx.config.output.dashed_bar),
        {"word": ctx.show(word), "r": ctx.show(std.r), "s": ctx.show(std.s)},
    )


def cmd_isf(ctx: Context) -> CommandResult:
    word = ctx.word(ctx.args.word)
    reference = INFINITY if ctx.args.wrt in ("inf", "oo") else ctx.word(ctx.args.wrt)
    decomposition = isf(word, reference)
    return CommandResult(
        decomposition.render(ctx.config.output.dashed_bar),
        {
            "word": ctx.show(word),
            "wrt": format_word(reference),
            "head": ctx.show(decomposition.head),
            "suffixes": [ctx.show(s) for s in decomposition.tail],
        },
    )


def cmd_word_class(ctx: Context) -> CommandResult:
    word = ctx.word(ctx.args.word)
    word_class = classify_word(word)
    return CommandResult(word_class.value, {"word": ctx.show(word), "class": word_class.value})


# ═══════════════════════════════════════════════════════════════════════════
#                          PERMUTATION COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_desasc(ctx: Context) -> CommandResult:
    pi = _permutation(ctx.args.perm)
    sets = pi.boundary_sets()
    text = (
        f"Des = {{{','.join(map(str, sorted(sets.descents)))}}}\n"
        f"Asc = {{{','.join(map(str, sorted(sets.ascents)))}}}"
    )
    return CommandResult(text, sets.to_dict())


def cmd_classify(ctx: Context) -> CommandResult:
    pi = _permutation(ctx.args.perm)
    parity = pi.parity_class()
    return CommandResult(
        f"{parity.value}  {format_permutation(pi)}",
        {"permutation": pi.to_dict(), "class": parity.value},
    )


def cmd_bona(ctx: Context) -> CommandResult:
    pi = _permutation(ctx.args.perm)
    image = bona_map(pi)
    return CommandResult(_perm_text(image), {"source": pi.to_dict(), "image": image.to_dict()})


def cmd_hat(ctx: Context) -> CommandResult:
    if ctx.args.inverse:
        values = _permutation(ctx.args.perm).one_line
        pi = foata_hat_inverse(values)
        return CommandResult(_perm_text(pi), {"hat": list(values), "permutation": pi.to_dict()})
    pi = _permutation(ctx.args.perm)
    values = foata_hat(pi)
    return CommandResult(
        " ".join(map(str, values)),
        {"permutation": pi.to_dict(), "hat": list(values)},
    )


# ═══════════════════════════════════════════════════════════════════════════
#                            NECKLACE COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_phi(ctx: Context) -> CommandResult:
    pi = _permutation(ctx.args.perm)
    subset = SubsetS.parse(ctx.args.set, pi.n)
    multiset = (phi if ctx.args.command == "phi" else xi)(subset, pi)
    return CommandResult(
        f"{multiset}  word {format_word(multiset.to_word())}",
        {"S": str(subset), "permutation": pi.to_dict(), **multiset.to_dict()},
    )


def cmd_phi_inv(ctx: Context) -> CommandResult:
    multiset = parse_necklaces(ctx.args.necklaces)
    subset = SubsetS.parse(ctx.args.set, multiset.total_length)
    pi = (phi_inv if ctx.args.command == "phi-inv" else xi_inv)(subset, multiset)
    return CommandResult(_perm_text(pi), {"S": str(subset), "necklaces": str(multiset), "permutation": pi.to_dict()})


# ═══════════════════════════════════════════════════════════════════════════
#                            BIJECTION COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_psi(ctx: Context) -> CommandResult:
    word = ctx.word(ctx.args.word)
    check = True if ctx.args.check else None
    trace = (psi_trace if ctx.args.command == "psi" else omega_trace)(word, check_invariants=check)
    text = f"result: {ctx.show(trace.result)}"
    if ctx.args.trace:
        text = f"{trace.render()}\n\n{text}"
    return CommandResult(text, {"word": ctx.show(word), "steps": trace.records(), "result": ctx.show(trace.result)})


def _fs_text(computation: FsComputation, show_trace: bool) -> str:
    if not show_trace:
        return _perm_text(computation.image)
    lines = [
        f"S = {computation.subset}",
        f"source   {_perm_text(computation.source)}",
        f"necklaces {computation.source_necklaces}  word {format_word(computation.source_word)}",
        "",
        computation.trace.render(),
        "",
        f"image word {format_word(computation.target_word)}  necklaces {computation.target_necklaces}",
        f"image    {_perm_text(computation.image)}",
    ]
    return "\n".join(lines)


def cmd_fs(ctx: Context) -> CommandResult:
    pi = _permutation(ctx.args.perm)
    subset = SubsetS.parse(ctx.args.set, pi.n)
    computation = (f_s_trace if ctx.args.command == "fs" else f_s_inverse_trace)(subset, pi)
    records = computation.to_dict()
    if ctx.args.trace:
        records["steps"] = computation.trace.records()
    return CommandResult(_fs_text(computation, ctx.args.trace), records)


# ═══════════════════════════════════════════════════════════════════════════
#                          VERIFICATION COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def _reports_result(reports: list) -> CommandResult:
    text = "\n\n".join(r.render() for r in reports)
    return CommandResult(
        text,
        [r.to_dict() for r in reports],
        ok=all(r.passed for r in reports),
    )


def cmd_verify_counts(ctx: Context) -> CommandResult:
    return _reports_result([verify_theorem_counts(n) for n in ctx.args.n])


def cmd_verify_fs(ctx: Context) -> CommandResult:
    reports = []
    for n in ctx.args.n:
        subsets = [SubsetS.parse(ctx.args.set, n)] if ctx.args.set is not None else None
        reports.append(verify_fs_bijectivity(n, subsets))
    return _reports_result(reports)


def cmd_verify_gf(ctx: Context) -> CommandResult:
    k, degree = ctx.args.k, ctx.args.degree
    reports = [verify_gf_identity(k, degree)]
    if ctx.args.series:
        reports += verify_parity_series(k, degree)
        reports += verify_substitution_symmetry(k, degree)
    return _reports_result(reports)


def cmd_verify_necklaces(ctx: Context) -> CommandResult:
    reports = []
    for n in ctx.args.n:
        reports.append(verify_necklace_counts(n))
        if ctx.args.roundtrips:
            reports.append(verify_necklace_roundtrips(n))
    return _reports_result(reports)


def cmd_verify_maps(ctx: Context) -> CommandResult:
    reports = []
    for n in ctx.args.n:
        reports.append(verify_hat_conjugation(n))
        if n % 2 == 0:
            reports.append(verify_bona_bijection(n))
    return _reports_result(reports)


def cmd_serve(ctx: Context) -> CommandResult:
    start_server(ctx.config)
    return CommandResult("", None)


def start_server(config: Config):
    """Start the FastAPI server."""
    import uvicorn
    from src.api.routes import app

    logger.info(f"Starting API server on {config.server.host}:{config.server.port}")

    uvicorn.run(
        app,
        host=config.server.host,
        port=config.server.port,
        log_level="info" if config.server.debug else "warning",
    )


# ═══════════════════════════════════════════════════════════════════════════
#                                 PARSER
# ═══════════════════════════════════════════════════════════════════════════

def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = argparse.ArgumentParser(
        prog="lyndon-parity",
        description="Lyndon factorizations, the odd/even parity bijection and f_S",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  lyndon-parity factorize dadccdbccc
  lyndon-parity isf adbccc --wrt ccd
  lyndon-parity psi ddecedbdbdccdabda
  lyndon-parity omega cdcdadbccc
  lyndon-parity phi --set 4,7 45672381
  lyndon-parity fs --set 4,7 75218634 --trace
  lyndon-parity verify-counts --n 4 5 6 7 8
  lyndon-parity verify-gf --k 3 --degree 8 --series
        """,
    )
    parser.add_argument("--alphabet", "-k", type=int, default=None,
                        help="Restrict words to the first k letters")
    parser.add_argument("--format", "-f", choices=["text", "records"], default=config.output.default_format,
                        help="Human-readable text or JSON records")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")

    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[Context], CommandResult], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    # Words
    command("factorize", cmd_factorize, "Lyndon factorization").add_argument("word")
    command("stdfact", cmd_stdfact, "Standard factorization of a Lyndon word").add_argument("word")
    p = command("isf", cmd_isf, "Iterated standard factorization")
    p.add_argument("word")
    p.add_argument("--wrt", default="inf", help="Reference word u (default: inf)")
    command("word-class", cmd_word_class, "W^o / W^e membership").add_argument("word")

    # Permutations
    for name, handler, help_text in [
        ("desasc", cmd_desasc, "Descent and ascent sets"),
        ("classify", cmd_classify, "Cycle parity class"),
        ("bona", cmd_bona, "Bóna's bijection (even n)"),
    ]:
        command(name, handler, help_text).add_argument("perm", nargs="+")
    p = command("hat", cmd_hat, "Hat transform")
    p.add_argument("perm", nargs="+")
    p.add_argument("--inverse", action="store_true", help="Read the input as a hat word")

    # Necklaces
    for name, help_text in [("phi", "Phi_S: permutation to necklaces"), ("xi", "Xi_S: odd cycles to necklaces")]:
        p = command(name, cmd_phi, help_text)
        p.add_argument("perm", nargs="+")
        p.add_argument("--set", "-s", required=True, help='Subset S, e.g. "4,7" or "full"')
    for name, help_text in [("phi-inv", "Phi_S^-1"), ("xi-inv", "Xi_S^-1")]:
        p = command(name, cmd_phi_inv, help_text)
        p.add_argument("necklaces", help='e.g. "(a,b)(a,b)(a,a,b,c)"')
        p.add_argument("--set", "-s", required=True)

    # Bijections
    for name, help_text in [("psi", "Psi: W^o to W^e with trace"), ("omega", "Omega: W^e to W^o with trace")]:
        p = command(name, cmd_psi, help_text)
        p.add_argument("word")
        p.add_argument(
            "--trace", action=argparse.BooleanOptionalAction, default=True,
            help="Print the (O, rule, E) step table before the result",
        )
        p.add_argument("--check", action="store_true", help="Assert per-step invariants")
    for name, help_text in [("fs", "f_S on S^o_n"), ("fs-inv", "f_S^-1 on S^e_n")]:
        p = command(name, cmd_fs, help_text)
        p.add_argument("perm", nargs="+")
        p.add_argument("--set", "-s", required=True)
        p.add_argument("--trace", action="store_true", help="Show every intermediate object")

    # Verification
    p = command("verify-counts", cmd_verify_counts, "Exact-set and subset counting theorems")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p = command("verify-fs", cmd_verify_fs, "f_S bijectivity for all (or one) S")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--set", "-s", default=None)
    p = command("verify-gf", cmd_verify_gf, "Lyndon parity product identity")
    p.add_argument("--k", type=int, default=config.alphabet.default_size)
    p.add_argument("--degree", "-D", type=int, required=True)
    p.add_argument("--series", action="store_true", help="Also check both word series and the sign flip")
    p = command("verify-necklaces", cmd_verify_necklaces, "Necklace multiset counts per S")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--roundtrips", action="store_true", help="Also sweep Phi_S and Xi_S roundtrips")
    p = command("verify-maps", cmd_verify_maps, "Hat conjugation and Bóna's bijection")
    p.add_argument("--n", type=int, nargs="+", required=True)

    command("serve", cmd_serve, "Start the HTTP API")
    return parser


def emit(result: CommandResult, output_format: str):
    if output_format == "records":
        print(json.dumps(result.records, indent=2, default=str))
    elif result.text:
        print(result.text)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    config = get_config()
    setup_logging(config, args.verbose)

    try:
        ctx = Context(config=config, alphabet=Alphabet(args.alphabet) if args.alphabet else None, args=args)
        result = args.handler(ctx)
    except CombinatoricsError as e:
        logger.debug(f"{args.command} failed: {e.to_dict()}")
        print(f"error: {e.message}", file=sys.stderr)
        return 2

    emit(result, args.format)
    if not result.ok:
        logger.warning(f"{args.command}: verification failed")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
