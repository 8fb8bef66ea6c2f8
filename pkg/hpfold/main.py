"""
Command-line interface. Every subcommand is a thin wrapper over the library;
results go to stdout, logs to stderr.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from hpfold.bounds import (
    best_bound,
    certify_equality,
    certify_suffix_drop,
    certify_wrap_drop,
    handshake_bound,
    lift_counterexample,
)
from hpfold.config import settings
from hpfold.corpus import CorpusRunner
from hpfold.errors import BudgetExceeded, HPFoldError, InputError
from hpfold.folding import (
    DecodeConstraints,
    contacts,
    decode_catalog_entry,
    decode_keyboard_moves,
    format_fold_text,
    keyboard_catalog,
    read_fold_file,
    score,
)
from hpfold.lattice import LatticeKind
from hpfold.multichain import (
    HydroLevels,
    RingHypothesis,
    contribution_counts,
    embedding_score,
    enumerate_ring_placements,
    intended_embedding,
    levels_bound_audit,
    read_embedding_file,
    validate_embedding,
    write_embedding_file,
)
from hpfold.render import render_diagram_svg, render_embedding_svg, render_fold_ascii, render_fold_svg
from hpfold.search import (
    SearchLimits,
    ball_vs_square_report,
    daisy_report,
    enumerate_optima,
    max_internal_edges,
    optimal,
)
from hpfold.topology import (
    ClosedCurve,
    fox3_count_curve,
    linked_cube_embedding,
    linking_number,
    project,
    unlinked_cube_embedding,
    verify_trefoil24,
)
from hpfold.words import Word

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's exit 2"""

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    if settings.LOG_FILE:
        root = logging.getLogger()
        if not any(isinstance(h, logging.FileHandler) for h in root.handlers):
            log_dir = Path(settings.LOG_FILE).parent
            log_dir.mkdir(exist_ok=True, parents=True)
            file_handler = logging.FileHandler(settings.LOG_FILE)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(file_handler)


def _limits(args) -> SearchLimits:
    values = {}
    if args.max_nodes is not None:
        values["max_nodes"] = args.max_nodes
    if args.max_seconds is not None:
        values["max_seconds"] = args.max_seconds
    if args.workers is not None:
        values["workers"] = args.workers
    return SearchLimits(**values)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def cmd_score(args) -> int:
    fold, word = read_fold_file(args.file)
    pairs = contacts(fold, word)
    print(f"score: {score(fold, word)}")
    for i, j in pairs:
        print(f"{i} {j}")
    return 0


def cmd_search(args) -> int:
    kind = LatticeKind(args.lattice)
    word = Word.parse(args.word)
    limits = _limits(args)
    try:
        result = optimal(kind, word, closed=args.closed or word.cyclic, limits=limits)
    except BudgetExceeded as e:
        print(f"J >= {e.best_value} (budget exhausted)")
        raise
    print(f"J: {result.value}")
    print(f"witness: {result.witness.moves if result.witness else ''}")
    print(f"nodes: {result.nodes}")
    if args.all:
        for fold in enumerate_optima(kind, word, closed=args.closed or word.cyclic, limits=limits):
            print(f"optimum: {fold.moves}")
    return 0


def cmd_bound(args) -> int:
    kind = LatticeKind(args.lattice)
    word = Word.parse(args.word)
    value, name = best_bound(kind, word, wrapped=args.wrapped)
    print(f"bound: {value} ({name})")
    print(f"handshake: {handshake_bound(kind, word, wrapped=args.wrapped or word.cyclic)}")
    return 0


def cmd_certify(args) -> int:
    fold, word = read_fold_file(args.file)
    if args.lift is not None:
        cert = lift_counterexample(fold.kind, word, fold, args.lift)
    elif args.claim == "equality":
        cert = certify_equality(fold.kind, word, fold)
    elif args.claim == "wrap_drop":
        cert = certify_wrap_drop(fold.kind, word, fold)
    else:
        cert = certify_suffix_drop(fold.kind, word, fold, args.suffix)
    print(cert.statement())
    print(f"bound: {cert.bound_value} ({cert.bound_used})")
    if cert.accepted:
        print("accepted")
        return 0
    print(f"rejected: {cert.detail}")
    return 2


def cmd_iso(args) -> int:
    if args.ball_square:
        report = ball_vs_square_report(args.radius, args.side)
        print(f"ball: sites={report.ball_sites} edges={report.ball_edges}")
        print(f"square: sites={report.square_sites} edges={report.square_edges}")
        return 0
    if args.daisy is not None:
        check = daisy_report(args.daisy)
        print(f"daisy r={check.radius} n={check.n} formula={check.formula_edges} "
              f"max={check.search_edges} unique={_bool(check.unique)}")
        return 0 if check.ok else 2
    if args.lattice is None or args.n is None:
        raise InputError("iso needs --lattice and --n, or --ball-square, or --daisy")
    result = max_internal_edges(LatticeKind(args.lattice), args.n)
    print(f"max={result.max_internal_edges} unique={_bool(result.unique)}")
    if args.witnesses:
        for shape in result.witnesses:
            print(" ".join(f"({x},{y},{z})" for x, y, z in shape))
    return 0


def cmd_multichain(args) -> int:
    if args.audit is not None:
        audit = levels_bound_audit(args.audit, args.c, strict_from=None)
        print(f"straight: {audit.straight_value} bent: {audit.bent_value} intended: {audit.intended_value}")
        print(f"strict: {_bool(audit.strict)}")
        return 0
    if args.ring is not None:
        report = enumerate_ring_placements(hypothesis=RingHypothesis(args.ring))
        print(f"solutions: {len(report.solutions)} images: {len(report.images)}")
        print(f"all_match: {_bool(report.all_match)}")
        return 0
    if args.file:
        embedding = read_embedding_file(args.file)
    elif args.intended is not None:
        embedding = intended_embedding(args.intended)
    else:
        raise InputError("multichain needs a file, --intended, --audit or --ring")
    report = validate_embedding(embedding)
    if not report.ok:
        raise InputError(f"Invalid embedding: {report.summary()}")
    levels = HydroLevels.standard(args.c)
    print(f"score: {embedding_score(embedding, levels)}")
    for value, count in sorted(contribution_counts(embedding, levels).items()):
        print(f"contribution {value}: {count}")
    return 0


def cmd_link(args) -> int:
    if args.build:
        embedding = linked_cube_embedding() if args.build == "linked" else unlinked_cube_embedding()
        if args.out:
            write_embedding_file(args.out, embedding)
    elif args.file:
        embedding = read_embedding_file(args.file)
    else:
        raise InputError("link needs an embedding file or --build")
    if len(embedding.chains) < 2:
        raise InputError("Linking number needs two chains")
    first, second = (ClosedCurve(vertices=tuple(c.sites)) for c in embedding.chains[:2])
    print(f"linking: {linking_number(first, second)}")
    return 0


def cmd_knot(args) -> int:
    if args.trefoil:
        report = verify_trefoil24()
        print(f"moves: {report.moves}")
        print(f"score: {report.score}")
        print(f"fox3: {report.fox3}")
        return 0
    if not args.file:
        raise InputError("knot needs a closed fold file or --trefoil")
    fold, _ = read_fold_file(args.file)
    curve = ClosedCurve.from_fold(fold)
    diagram = project(curve)
    print(f"fox3: {fox3_count_curve(curve)}")
    print(f"crossings: {len(diagram.crossings)} arcs: {diagram.arcs}")
    return 0


def cmd_decode(args) -> int:
    if args.catalog:
        result = decode_catalog_entry(args.catalog)
        constraints = keyboard_catalog()[args.catalog]
        word, closed = constraints.word, constraints.closed
    else:
        if not args.text or not args.word:
            raise InputError("decode needs TEXT and --word, or --catalog")
        word = Word.parse(args.word)
        closed = args.closed or word.cyclic
        constraints = DecodeConstraints(word=word, closed=closed, zero_cube=args.zero_cube)
        result = decode_keyboard_moves(args.text, constraints)
    mapping = result.canonical
    print(f"mappings: {len(result.mappings)}")
    print("mapping: " + " ".join(f"{k}->{v}" for k, v in sorted(mapping.items())))
    sys.stdout.write(format_fold_text(result.fold_for(mapping, closed), word))
    return 0


def cmd_render(args) -> int:
    path = Path(args.file)
    if path.suffix == ".emb":
        if args.format != "svg":
            raise InputError("Embeddings render as svg only")
        text = render_embedding_svg(read_embedding_file(path), show_contacts=args.contacts)
    else:
        fold, word = read_fold_file(path)
        if args.format == "ascii":
            text = render_fold_ascii(fold, word)
        elif args.diagram:
            text = render_diagram_svg(project(ClosedCurve.from_fold(fold)))
        else:
            text = render_fold_svg(fold, word, show_contacts=args.contacts)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {args.format} to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_corpus(args) -> int:
    runner = CorpusRunner(args.dir)
    report = runner.run(include_slow=not args.skip_slow, only=args.only or None)
    for result in report.results:
        if result.success:
            print(f"ok {result.entry_id}")
        else:
            print(f"FAIL {result.entry_id}: {result.error}")
    stats = runner.get_stats()
    print(f"passed: {stats['processed_count']} failed: {stats['error_count']} skipped: {len(report.skipped)}")
    return 0 if report.ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=settings.APP_NAME, description="Exact HP lattice folding solver and certificate verifier")
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)
    lattices = [k.value for k in LatticeKind]

    p = sub.add_parser("score", help="score a fold file and list its contacts")
    p.add_argument("file")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("search", help="exact optimum by branch and bound")
    p.add_argument("--lattice", required=True, choices=lattices)
    p.add_argument("--word", required=True)
    p.add_argument("--closed", action="store_true")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--workers", type=int)
    p.add_argument("--all", action="store_true", help="also list every optimal fold up to symmetry")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bound", help="upper bound on the optimum")
    p.add_argument("--lattice", required=True, choices=lattices)
    p.add_argument("--word", required=True)
    p.add_argument("--wrapped", action="store_true", help="bound 1w1 instead of w")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="check a certificate for a fold file")
    p.add_argument("file")
    p.add_argument("--claim", choices=["equality", "wrap_drop", "suffix_drop"], default="equality")
    p.add_argument("--suffix", default="1")
    p.add_argument("--lift", type=int, help="prepend this many ones and certify the lifted drop")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("iso", help="edge-isoperimetric enumeration")
    p.add_argument("--lattice", choices=lattices)
    p.add_argument("--n", type=int)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--ball-square", action="store_true")
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--side", type=int, default=5)
    p.add_argument("--daisy", type=int, metavar="R")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("multichain", help="levels-of-hydrophobicity scoring and audits")
    p.add_argument("file", nargs="?")
    p.add_argument("--c", type=int, default=10)
    p.add_argument("--intended", type=int, metavar="M")
    p.add_argument("--audit", type=int, metavar="X")
    p.add_argument("--ring", choices=[h.value for h in RingHypothesis])
    p.set_defaults(func=cmd_multichain)

    p = sub.add_parser("link", help="linking number of the first two chains")
    p.add_argument("file", nargs="?")
    p.add_argument("--build", choices=["linked", "unlinked"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("knot", help="Fox 3-colouring count of a closed fold")
    p.add_argument("file", nargs="?")
    p.add_argument("--trefoil", action="store_true")
    p.set_defaults(func=cmd_knot)

    p = sub.add_parser("decode", help="decode a keyboard move string")
    p.add_argument("text", nargs="?")
    p.add_argument("--word")
    p.add_argument("--closed", action="store_true")
    p.add_argument("--zero-cube", type=int)
    p.add_argument("--catalog", choices=["trefoil24", "cube54"])
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("render", help="draw a fold or embedding")
    p.add_argument("file")
    p.add_argument("--format", choices=["svg", "ascii"], default="svg")
    p.add_argument("--out")
    p.add_argument("--contacts", action="store_true")
    p.add_argument("--diagram", action="store_true", help="draw the knot diagram of a closed fold")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify-corpus", help="run every corpus check")
    p.add_argument("--dir")
    p.add_argument("--skip-slow", action="store_true")
    p.add_argument("--only", nargs="*")
    p.set_defaults(func=cmd_verify_corpus)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except HPFoldError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Validation failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
