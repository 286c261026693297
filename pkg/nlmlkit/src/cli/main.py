"""
Command-line frontend: parse, validate, transform, answer and db subcommands.

Exit codes: 0 success, 1 domain error (no parse, model or store error),
2 usage, configuration or lexicon error.
"""
import argparse
import json
import logging
import sys
from typing import Dict, List, Optional, TextIO

from ..core.grammar import parse
from ..core.lexicon import Lexicon, load_lexicon
from ..core.nlml import canonicalize, deserialize, render_tree, serialize, validate
from ..core.nlom import QUERIES, answer, build_model, negate, render_text, to_document, transform_mood
from ..database.store import NlmlStore
from ..models.nlml import NlmlDocument
from ..models.parse import Mood
from ..models.record import DbClass
from ..utils.config import CliConfig, OutputFormat, load_config
from ..utils.errors import ConfigError, LexiconError, NlmlError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

TRANSFORMS = ("negate", "to-question", "to-statement")


class Session:
    """Configuration plus the lexicon, loaded on first use"""

    def __init__(self, config: CliConfig, out: TextIO):
        self.config = config
        self.out = out
        self._lexicon: Optional[Lexicon] = None

    @property
    def lexicon(self) -> Lexicon:
        if self._lexicon is None:
            self._lexicon = load_lexicon(self.config.lexicon_path)
        return self._lexicon

    def emit(self, line: str) -> None:
        self.out.write(line + "\n")

    def document(self, raw: Optional[str]) -> NlmlDocument:
        """Input given as NLML (starts with '<') or as text, read from stdin when absent"""
        text = raw if raw not in (None, "-") else sys.stdin.read()
        text = text.strip()
        if text.startswith("<"):
            return deserialize(text)
        return parse(text, self.lexicon)[0].document


def cmd_parse(session: Session, args: argparse.Namespace) -> int:
    text = args.text if args.text not in (None, "-") else sys.stdin.read()
    results = parse(text.strip(), session.lexicon)
    shown = results if session.config.all_results else results[:1]
    fmt = session.config.output_format
    for result in shown:
        if fmt == OutputFormat.JSON_LINES:
            session.emit(json.dumps(result.to_dict(), sort_keys=True))
        elif fmt == OutputFormat.TREE:
            session.emit(render_tree(result.document))
        elif session.config.all_results:
            session.emit(f"penalty={result.penalty} probability={result.probability:.6g} rule={result.rule}")
            session.emit(serialize(result.document))
        else:
            session.emit(serialize(result.document))
    return EXIT_OK


def cmd_validate(session: Session, args: argparse.Namespace) -> int:
    issues = validate(session.document(args.input))
    for issue in issues:
        session.emit(issue)
    if issues:
        return EXIT_DOMAIN
    session.emit("ok")
    return EXIT_OK


def cmd_transform(session: Session, args: argparse.Namespace) -> int:
    model = build_model(session.document(args.input), session.lexicon)
    if args.op == "negate":
        model = negate(model, session.lexicon)
    else:
        target = Mood.QUESTION if args.op == "to-question" else Mood.STATEMENT
        model = transform_mood(model, target, session.lexicon)
    session.emit(serialize(canonicalize(to_document(model))))
    if session.config.show_text:
        session.emit(render_text(model))
    return EXIT_OK


def cmd_answer(session: Session, args: argparse.Namespace) -> int:
    model = build_model(session.document(args.input), session.lexicon)
    value = answer(model, args.query, args.part_index)
    session.emit(value if value is not None else "")
    return EXIT_OK


def cmd_db(session: Session, args: argparse.Namespace) -> int:
    store = NlmlStore(session.config.store_path)
    json_lines = session.config.output_format == OutputFormat.JSON_LINES
    if args.db_command == "put":
        session.emit(str(store.put(session.document(args.input))))
    elif args.db_command == "get":
        record = store.get(args.key)
        session.emit(json.dumps(record.to_dict(), sort_keys=True) if json_lines else record.nlml)
    elif args.db_command == "query":
        db_class = DbClass(args.db_class) if args.db_class != "all" else None
        for record in store.query(db_class):
            if json_lines:
                session.emit(json.dumps(record.to_dict(), sort_keys=True))
            else:
                session.emit(record.to_line().rstrip("\n"))
    else:
        keys = args.keys or [r.key for r in store.query()]
        for model in store.rebuild(keys, session.lexicon):
            session.emit(render_text(model))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand from resetting an option given before it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--lexicon", help="lexicon file (env NLMLKIT_LEXICON)")
    common.add_argument("--store", help="store file (env NLMLKIT_STORE)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], help="output format")
    common.add_argument("--all", action="store_true", help="print every ranked analysis")
    common.add_argument("--log-level", help="logging level (env NLMLKIT_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="nlmlkit", description="English sentences to NLML and back")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("parse", parents=[common], help="print the NLML of a sentence")
    p.add_argument("text", nargs="?", help="text to parse; stdin when omitted")
    p.set_defaults(handler=cmd_parse)

    p = commands.add_parser("validate", parents=[common], help="check an NLML string")
    p.add_argument("input", nargs="?", help="NLML or text; stdin when omitted")
    p.set_defaults(handler=cmd_validate)

    p = commands.add_parser("transform", parents=[common], help="negate or change mood")
    p.add_argument("op", choices=TRANSFORMS)
    p.add_argument("input", nargs="?", help="NLML or text; stdin when omitted")
    p.add_argument("--text", dest="show_text", action="store_true", help="also print the rendered sentence")
    p.set_defaults(handler=cmd_transform)

    p = commands.add_parser("answer", parents=[common], help="answer a grammar question")
    p.add_argument("query", choices=QUERIES)
    p.add_argument("part_index", type=int)
    p.add_argument("input", nargs="?", help="NLML or text; stdin when omitted")
    p.set_defaults(handler=cmd_answer)

    p = commands.add_parser("db", parents=[common], help="store and retrieve NLML")
    db = p.add_subparsers(dest="db_command", required=True)
    put = db.add_parser("put", parents=[common])
    put.add_argument("input", nargs="?", help="NLML or text; stdin when omitted")
    get = db.add_parser("get", parents=[common])
    get.add_argument("key", type=int)
    query = db.add_parser("query", parents=[common])
    query.add_argument("db_class", choices=[c.value for c in DbClass] + ["all"])
    rebuild = db.add_parser("rebuild", parents=[common])
    rebuild.add_argument("keys", nargs="*", type=int, help="record keys; every record when omitted")
    p.set_defaults(handler=cmd_db)
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, object]:
    return {
        "lexicon_path": getattr(args, "lexicon", None),
        "store_path": getattr(args, "store", None),
        "output_format": getattr(args, "format", None),
        "all_results": getattr(args, "all", None),
        "show_text": getattr(args, "show_text", False) or None,
        "log_level": getattr(args, "log_level", None),
    }


def _parse_args(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> argparse.Namespace:
    """
    Parse argv, letting the optional input follow an option
    (``transform negate --text "I come"``), which argparse leaves unassigned.
    """
    args, extras = parser.parse_known_args(argv)
    slot = "text" if args.command == "parse" else "input"
    if len(extras) == 1 and not extras[0].startswith("-") and getattr(args, slot, "") is None:
        setattr(args, slot, extras[0])
    elif extras:
        parser.error("unrecognized arguments: " + " ".join(extras))
    return args


def main(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = _parse_args(parser, argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_USAGE
    try:
        config = load_config(_overrides(args))
    except ConfigError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    logging.basicConfig(level=config.log_level, format="%(levelname)s %(name)s: %(message)s", stream=err)
    session = Session(config, out)
    try:
        return args.handler(session, args)
    except (LexiconError, ConfigError) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    except NlmlError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_DOMAIN
