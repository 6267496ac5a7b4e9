"""Command-line front end.

Subcommands: parse, eval, valid, cmp, card, arith [--real], lattice,
check.  Truth values print as single lowercase letters; sets, cardinals
and para-reals print in their literal syntaxes, all of which re-parse.

Exit codes: 0 ok, 2 parse error, 3 unresolved name, 4 guard violation,
5 self-check failure.

A session file binds names and declares the quantifier universe:

    # lines starting with # are comments
    let A = <{a}|{b}|{}>
    universe a b c d

Quantifiers range over the declared finite universe (the theory's
universe of all sets is a proper class and is not on offer here).  If
no universe is declared, the realms of the bound sets are used.  Atoms
mentioned in bound sets or the universe are usable by name in formulas;
a universe entry may also name a previously bound set.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import selfcheck
from .cardinal import Aleph, B_UNIT, Cardinal, Fin, N_UNIT, card_of, lattice_dot
from .checker import DomainValue, Model, evaluate, valid_prop
from .errors import (BZFCError, DisjointnessViolation, GuardError, GuardExceeded,
                     NotPropositional, ParseError, UnresolvedName)
from .formula import parse as parse_formula, render
from .numerosity import cong_tv, preceq_tv
from .parareal import ParaReal
from .sets import Atom, Element, NCSet, parse_element, parse_ncset

MAX_CHECK_CASES = 100_000


# ---------------------------------------------------------------------------
# Sessions


@dataclass
class Session:
    bindings: dict[str, NCSet] = field(default_factory=dict)
    universe: list[DomainValue] | None = None


def load_session(path: str) -> Session:
    session = Session()
    with open(path, encoding="utf-8") as handle:
        lines = handle.readlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            _session_line(session, line)
        except ParseError as err:
            raise ParseError(f"{path}:{lineno}: {err.args[0]}", err.position,
                             err.expected) from None
    return session


def _session_line(session: Session, line: str) -> None:
    words = line.split(None, 1)
    if words[0] == "let":
        rest = words[1] if len(words) > 1 else ""
        name, eq, literal = rest.partition("=")
        name = name.strip()
        if not name.isidentifier() or not eq:
            raise ParseError("expected 'let NAME = <set literal>'", 0,
                             frozenset({"let"}))
        if name in session.bindings:
            raise ParseError(f"name {name!r} bound twice", 0)
        session.bindings[name] = parse_ncset(literal.strip())
    elif words[0] == "universe":
        if session.universe is not None:
            raise ParseError("universe declared twice", 0)
        entries = words[1].split() if len(words) > 1 else []
        if not entries:
            raise ParseError("universe must not be empty", 0)
        session.universe = [_universe_entry(session, text) for text in entries]
    else:
        raise ParseError(f"unknown directive {words[0]!r}", 0,
                         frozenset({"let", "universe", "#"}))


def _universe_entry(session: Session, text: str) -> DomainValue:
    if text in session.bindings:
        return session.bindings[text]
    return parse_element(text)


def session_model(session: Session) -> Model:
    env: dict[str, DomainValue] = {}

    def register(value: DomainValue) -> None:
        if isinstance(value, Atom):
            env.setdefault(value.name, value)

    universe: list[DomainValue]
    if session.universe is not None:
        universe = list(session.universe)
    else:
        realm: set[Element] = set()
        for bound_set in session.bindings.values():
            realm |= bound_set.realm
        universe = sorted(realm, key=str)
    for value in universe:
        register(value)
    for bound_set in session.bindings.values():
        for element in bound_set.realm:
            register(element)
    env.update(session.bindings)  # explicit bindings win over atom names
    return Model(universe, env)


def _load(args: argparse.Namespace) -> Session:
    if getattr(args, "session", None):
        return load_session(args.session)
    return Session()


def _resolve_set(text: str, session: Session) -> NCSet:
    if text in session.bindings:
        return session.bindings[text]
    return parse_ncset(text)


# ---------------------------------------------------------------------------
# Arithmetic expressions (cardinal and para-real modes)


class _ArithParser:
    """expr := term (('+'|'-') term)*
    term := factor (('*'|'/') factor | unit)*        unit: juxtaposed b or n
    factor := '-' factor | NAT | ALEPH | 'b' | 'n' | '(' expr ')'
    Subtraction, division, and unary minus exist only in --real mode."""

    def __init__(self, text: str, real: bool):
        self.text = text
        self.real = real
        self.tokens = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str, int]]:
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("nat", text[i:j], i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("name", text[i:j], i))
                i = j
            elif ch in "+-*/()":
                tokens.append((ch, ch, i))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", i)
        tokens.append(("end", "", len(text)))
        return tokens

    @property
    def tok(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def _real_only(self, op: str) -> None:
        if not self.real:
            raise ParseError(f"{op!r} needs --real (cardinals have no subtraction)",
                             self.tok[2])

    def parse(self):
        value = self.expr()
        if self.tok[0] != "end":
            raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2],
                             frozenset({"end of input"}))
        return value

    def expr(self):
        value = self.term()
        while self.tok[0] in "+-":
            op = self.tok[0]
            if op == "-":
                self._real_only(op)
            self.i += 1
            right = self.term()
            value = value - right if op == "-" else value + right
        return value

    def term(self):
        value = self.factor()
        while True:
            kind, text, _ = self.tok
            if kind in "*/":
                if kind == "/":
                    self._real_only(kind)
                self.i += 1
                right = self.factor()
                value = value / right if kind == "/" else value * right
            elif kind == "name" and text in ("b", "n"):
                self.i += 1
                value = value * self._unit(text)
            else:
                return value

    def factor(self):
        kind, text, pos = self.tok
        if kind == "-":
            self._real_only(kind)
            self.i += 1
            return -self.factor()
        if kind == "(":
            self.i += 1
            value = self.expr()
            if self.tok[0] != ")":
                raise ParseError(f"unexpected {self.tok[1]!r}", self.tok[2],
                                 frozenset({"')'"}))
            self.i += 1
            return value
        if kind == "nat":
            self.i += 1
            n = int(text)
            return ParaReal(n) if self.real else Cardinal.finite(n, 0, 0)
        if kind == "name":
            if text in ("b", "n"):
                self.i += 1
                return self._unit(text)
            if text.startswith("aleph") and text[5:].isdigit():
                if self.real:
                    raise ParseError("alephs are cardinals, not para-reals", pos)
                self.i += 1
                return Cardinal(Aleph(int(text[5:])), Fin(0), Fin(0))
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos,
                         frozenset({"number", "'b'", "'n'", "'('"}))

    def _unit(self, text: str):
        if self.real:
            return ParaReal(0, 1, 0) if text == "b" else ParaReal(0, 0, 1)
        return B_UNIT if text == "b" else N_UNIT


def eval_arith(text: str, real: bool = False):
    """Evaluate a cardinal (or, with real=True, para-real) expression."""
    return _ArithParser(text, real).parse()


# ---------------------------------------------------------------------------
# Subcommands


def cmd_parse(args: argparse.Namespace) -> int:
    print(render(parse_formula(args.formula)))
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    model = session_model(_load(args))
    print(evaluate(parse_formula(args.formula), model))
    return 0


def cmd_valid(args: argparse.Namespace) -> int:
    ok, witness = valid_prop(parse_formula(args.formula))
    if ok:
        print("valid")
    else:
        assert witness is not None
        assignment = " ".join(f"{name}={tv}" for name, tv in sorted(witness.items()))
        print("invalid")
        print(f"witness: {assignment}" if assignment else "witness: (no letters)")
    return 0


def cmd_cmp(args: argparse.Namespace) -> int:
    session = _load(args)
    a = _resolve_set(args.seta, session)
    b = _resolve_set(args.setb, session)
    print(f"cong: {cong_tv(a, b)}")
    print(f"preceq: {preceq_tv(a, b)}")
    return 0


def cmd_card(args: argparse.Namespace) -> int:
    session = _load(args)
    print(card_of(_resolve_set(args.set, session)))
    return 0


def cmd_arith(args: argparse.Namespace) -> int:
    print(eval_arith(args.expr, real=args.real))
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    sys.stdout.write(lattice_dot((args.t, args.b, args.n)))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    if args.cases > MAX_CHECK_CASES:
        raise GuardExceeded(f"at most {MAX_CHECK_CASES} cases (asked for {args.cases})")
    results = selfcheck.run_all(args.seed, args.cases)
    failed = False
    for result in results:
        if result.ok:
            print(f"ok {result.name} ({result.checks} checks)")
        else:
            failed = True
            print(f"FAIL {result.name} ({len(result.failures)} of {result.checks} checks)")
            for detail in result.failures[:10]:
                print(f"  {detail}")
            if len(result.failures) > 10:
                print(f"  ... and {len(result.failures) - 10} more")
    total = sum(result.checks for result in results)
    if failed:
        print(f"FAILED (seed {args.seed})")
        return 5
    print(f"all {total} checks passed (seed {args.seed})")
    return 0


# ---------------------------------------------------------------------------
# Argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bzfc",
        description="Evaluate four-valued formulas and compute with "
                    "inconsistent/incomplete sets, their cardinals, and para-reals.",
        epilog="Quantifiers range over the finite universe declared in the "
               "session file (or, by default, the realms of its bound sets). "
               "This deliberately replaces the theory's class-sized universe "
               "of all sets, which no evaluator can iterate; everything else "
               "follows the four-valued semantics exactly.")
    sub = parser.add_subparsers(required=True, metavar="command")

    session_parent = argparse.ArgumentParser(add_help=False)
    session_parent.add_argument("--session", metavar="FILE",
                                help="session file with let-bindings and a universe")

    p = sub.add_parser("parse", parents=[session_parent],
                       help="parse a formula and print its canonical form")
    p.add_argument("formula")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", parents=[session_parent],
                       help="evaluate a formula; prints one of t b n f")
    p.add_argument("formula")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("valid", help="propositional validity over all assignments")
    p.add_argument("formula")
    p.set_defaults(func=cmd_valid)

    p = sub.add_parser("cmp", parents=[session_parent],
                       help="compare two sets: equinumerosity and size order")
    p.add_argument("seta")
    p.add_argument("setb")
    p.set_defaults(func=cmd_cmp)

    p = sub.add_parser("card", parents=[session_parent],
                       help="the cardinal of a set, as a literal")
    p.add_argument("set")
    p.set_defaults(func=cmd_card)

    p = sub.add_parser("arith", help="evaluate a cardinal (or --real) expression")
    p.add_argument("--real", action="store_true",
                   help="para-real mode: rationals, subtraction, division")
    p.add_argument("expr")
    p.set_defaults(func=cmd_arith)

    p = sub.add_parser("lattice", help="DOT diagram of finite cardinals within bounds")
    p.add_argument("t", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("check", help="run the seeded self-check suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DisjointnessViolation, NotPropositional) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except UnresolvedName as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except GuardError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BZFCError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
