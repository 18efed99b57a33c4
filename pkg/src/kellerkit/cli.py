"""Command line interface and the polynomial text format.

Grammar for polynomial arguments (whitespace is insignificant between
tokens):

    poly  := ['-'] term (('+' | '-') term)*
    term  := coeff ('*' monom)? | monom
    coeff := nat ('/' nat)?
    monom := var ('^' nat)? ('*' var ('^' nat)?)*
    var   := 'x' | 'y'

The optional leading '-' is a conservative extension so that canonical
renderings of polynomials with a negative leading coefficient parse back.
Univariate arguments (parametrization components, elementary shifts) use
the same grammar restricted to the variable x.

Exit codes: 0 success, 2 hypothesis violated (non-Keller input, failed
embedding, not an automorphism, non-injective restriction), 3 malformed
input or usage, 4 internal contradiction (a state mathematics rules out,
reported rather than assumed away).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import BiPoly, Line, PolyMap, UniPoly
from .embedding import Parametrization, is_embedding, rectify
from .errors import (
    AbhyankarMohViolation,
    DenominatorZero,
    HypothesisViolated,
    InvalidLine,
    JacobianNotConstant,
    NotAnEmbedding,
    NotInjectiveOnLine,
    ParseError,
    PreconditionViolated,
    TheoremViolationWitness,
)
from .keller import is_keller, prove_line, verify_certificate
from .newton import newton_polygon, similarity_check
from .tame import (
    AffineFactor,
    ElementaryFactor,
    Factorization,
    NotAutomorphism,
    decide_automorphism,
    factorization_inverse,
    factorization_to_map,
    random_tame,
)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.i = 0
        self.n = len(text)
        self.vars = variables

    def _location(self, idx: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, idx) + 1
        col = idx - (self.text.rfind("\n", 0, idx) + 1) + 1
        return line, col

    def _fail(self, message: str, idx: int, expected: str):
        line, col = self._location(idx)
        raise ParseError(message, line, col, expected)

    def _skip_ws(self):
        while self.i < self.n and self.text[self.i] in " \t\r\n":
            self.i += 1

    def _peek(self) -> str:
        return self.text[self.i] if self.i < self.n else ""

    def parse(self) -> BiPoly:
        self._skip_ws()
        if self.i >= self.n:
            self._fail("empty input", self.i, "a term")
        total = BiPoly.zero()
        sign = 1
        if self._peek() == "-":
            self.i += 1
            self._skip_ws()
            sign = -1
        total = total + self._term() * sign
        while True:
            self._skip_ws()
            ch = self._peek()
            if not ch:
                return total
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            else:
                self._fail("unexpected character %r" % ch, self.i, "'+', '-', or end of input")
            self.i += 1
            self._skip_ws()
            total = total + self._term() * sign

    def _term(self) -> BiPoly:
        ch = self._peek()
        if ch.isdigit():
            c = self._coeff()
            save = self.i
            self._skip_ws()
            if self._peek() == "*":
                self.i += 1
                self._skip_ws()
                return self._monom() * c
            self.i = save
            return BiPoly.constant(c)
        if ch.isalpha():
            return self._monom()
        self._fail(
            "expected a term" if ch else "unexpected end of input",
            self.i,
            "a coefficient or a variable",
        )

    def _nat(self) -> int:
        start = self.i
        while self.i < self.n and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self._fail("expected a number", self.i, "a digit")
        return int(self.text[start : self.i])

    def _coeff(self):
        num = self._nat()
        save = self.i
        self._skip_ws()
        if self._peek() == "/":
            self.i += 1
            self._skip_ws()
            den_at = self.i
            den = self._nat()
            if den == 0:
                line, col = self._location(den_at)
                raise DenominatorZero(line, col)
            return Fraction(num, den)
        self.i = save
        return num

    def _monom(self) -> BiPoly:
        exps = {v: 0 for v in self.vars}
        self._read_var_power(exps)
        while True:
            save = self.i
            self._skip_ws()
            if self._peek() != "*":
                self.i = save
                break
            self.i += 1
            self._skip_ws()
            self._read_var_power(exps)
        i = exps.get("x", 0)
        j = exps.get("y", 0)
        return BiPoly({(i, j): 1})

    def _read_var_power(self, exps: dict):
        ch = self._peek()
        if not ch.isalpha():
            self._fail(
                "expected a variable" if ch else "unexpected end of input",
                self.i,
                " or ".join("'%s'" % v for v in self.vars),
            )
        if ch not in exps:
            self._fail(
                "unknown variable %r" % ch,
                self.i,
                " or ".join("'%s'" % v for v in self.vars),
            )
        self.i += 1
        e = 1
        save = self.i
        self._skip_ws()
        if self._peek() == "^":
            self.i += 1
            self._skip_ws()
            e = self._nat()
        else:
            self.i = save
        exps[ch] += e


def parse_bipoly(text: str) -> BiPoly:
    """Parse a polynomial in x and y."""
    return _Parser(text, ("x", "y")).parse()


def parse_unipoly(text: str) -> UniPoly:
    """Parse a univariate polynomial in x."""
    return _Parser(text, ("x",)).parse().as_unipoly_in_x()


def factorization_from_json(data: list) -> Factorization:
    """Rebuild a factor word from its JSON form."""
    word = []
    for item in data:
        kind = item["kind"]
        if kind == "affine":
            (m11, m12), (m21, m22) = item["matrix"]
            t1, t2 = item["translation"]
            word.append(
                AffineFactor(
                    Fraction(*m11), Fraction(*m12), Fraction(*m21), Fraction(*m22),
                    Fraction(*t1), Fraction(*t2),
                )
            )
        elif kind == "elementary":
            word.append(ElementaryFactor(item["axis"], parse_unipoly(item["shift"])))
        else:
            raise ValueError("unknown factor kind %r" % kind)
    return Factorization(tuple(word))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _parse_line_arg(text: str) -> Line:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("expected three comma-separated coefficients")
    a, b, c = (Fraction(part.strip()) for part in parts)
    return Line(a, b, c)


def _cmd_jac(args) -> int:
    H = PolyMap(parse_bipoly(args.first), parse_bipoly(args.second))
    report = is_keller(H)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print("jacobian: %s" % report.jacobian.render())
        print("keller: %s" % ("true" if report.is_keller else "false"))
    return 0


def _cmd_polygon(args) -> int:
    poly = newton_polygon(parse_bipoly(args.poly))
    if args.json:
        _print_json(poly.to_json_dict())
    else:
        print("vertices: %s" % poly.render())
    return 0


def _cmd_similar(args) -> int:
    report = similarity_check(parse_bipoly(args.first), parse_bipoly(args.second))
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print("similar: %s" % ("true" if report.similar else "false"))
        print("factor: %s" % report.factor)
        print("n_f: %s" % report.n_f.render())
        print("n_g: %s" % report.n_g.render())
    return 0


def _cmd_is_auto(args) -> int:
    H = PolyMap(parse_bipoly(args.first), parse_bipoly(args.second))
    result = decide_automorphism(H)
    if isinstance(result, NotAutomorphism):
        if args.json:
            _print_json(result.to_json_dict())
        else:
            print("automorphism: false")
            print("reason: %s" % result.reason)
            print("residual: %s" % result.residual.render())
        return 2
    if args.json:
        _print_json({"automorphism": True, "factorization": result.to_json_list()})
    else:
        print("automorphism: true")
        print("factors: %d" % len(result))
        for factor in result:
            print(factor.render())
    return 0


def _cmd_invert(args) -> int:
    H = PolyMap(parse_bipoly(args.first), parse_bipoly(args.second))
    result = decide_automorphism(H)
    if isinstance(result, NotAutomorphism):
        if args.json:
            _print_json(result.to_json_dict())
        else:
            print("automorphism: false")
            print("reason: %s" % result.reason)
            print("residual: %s" % result.residual.render())
        return 2
    inverse_word = factorization_inverse(result)
    inverse_map = factorization_to_map(inverse_word)
    if args.json:
        _print_json(
            {
                "inverse": inverse_map.to_json_dict(),
                "factorization": inverse_word.to_json_list(),
            }
        )
    else:
        print("inverse: %s" % inverse_map.render())
        print("factors: %d" % len(inverse_word))
        for factor in inverse_word:
            print(factor.render())
    return 0


def _cmd_embed_check(args) -> int:
    gamma = Parametrization(parse_unipoly(args.first), parse_unipoly(args.second))
    report = is_embedding(gamma)
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print("injective: %s" % ("true" if report.injective else "false"))
        print("immersion: %s" % ("true" if report.immersion else "false"))
        if report.witness is not None:
            print("witness: %s" % report.witness.render())
    return 0


def _cmd_rectify(args) -> int:
    gamma = Parametrization(parse_unipoly(args.first), parse_unipoly(args.second))
    word = rectify(gamma)
    if args.json:
        _print_json({"factorization": word.to_json_list()})
    else:
        print(word.render())
    return 0


def _cmd_prove_line(args) -> int:
    H = PolyMap(parse_bipoly(args.first), parse_bipoly(args.second))
    try:
        line = _parse_line_arg(args.line)
    except (ValueError, ZeroDivisionError) as exc:
        print("error: invalid --line value: %s" % exc, file=sys.stderr)
        return 3
    inverse_map, word, cert = prove_line(H, line)
    if args.certificate:
        payload = json.dumps(cert.to_json_list(), indent=2)
        with open(args.certificate, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
        # Re-read and replay the certificate so the written file is known
        # to be consumable, not just written.
        with open(args.certificate, "r", encoding="utf-8") as handle:
            stored = json.load(handle)
        inverted = next(s for s in stored if s["step"] == "inverted")
        reread = factorization_from_json(inverted["factorization"])
        if factorization_to_map(reread) != H or not verify_certificate(cert, H):
            print("error: certificate failed replay", file=sys.stderr)
            return 4
    if args.json:
        _print_json(
            {
                "inverse": inverse_map.to_json_dict(),
                "factorization": word.to_json_list(),
                "certificate": cert.to_json_list(),
            }
        )
    else:
        print("inverse: %s" % inverse_map.render())
        print("factors: %d" % len(word))
        print("certificate:")
        for step in cert.steps:
            print("  " + step.render())
    return 0


def _cmd_gen_auto(args) -> int:
    if args.factors < 0 or args.max_deg < 1 or args.coeff_bound < 1:
        print(
            "error: --factors must be >= 0, --max-deg and --coeff-bound >= 1",
            file=sys.stderr,
        )
        return 3
    word = random_tame(
        args.seed,
        args.factors,
        args.max_deg,
        args.coeff_bound,
        affine_probability=args.affine_probability,
    )
    if args.json:
        _print_json({"factorization": word.to_json_list()})
    else:
        print(word.render())
    return 0


_COMMANDS = {
    "jac": _cmd_jac,
    "polygon": _cmd_polygon,
    "similar": _cmd_similar,
    "is-auto": _cmd_is_auto,
    "invert": _cmd_invert,
    "embed-check": _cmd_embed_check,
    "rectify": _cmd_rectify,
    "prove-line": _cmd_prove_line,
    "gen-auto": _cmd_gen_auto,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kellerkit",
        description="Exact tools for planar Keller maps: Newton polygons, "
        "tame automorphisms, line embeddings, certified inversion.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = with_json(sub.add_parser("jac", help="Jacobian determinant and Keller test"))
    p.add_argument("first", help="first component, a polynomial in x and y")
    p.add_argument("second", help="second component")

    p = with_json(sub.add_parser("polygon", help="Newton polygon of a polynomial"))
    p.add_argument("poly", help="a polynomial in x and y")

    p = with_json(sub.add_parser("similar", help="Newton polygon similarity test"))
    p.add_argument("first", help="first component, degree > 1")
    p.add_argument("second", help="second component, degree > 1")

    p = with_json(sub.add_parser("is-auto", help="recognize a tame automorphism"))
    p.add_argument("first")
    p.add_argument("second")

    p = with_json(sub.add_parser("invert", help="invert a tame automorphism"))
    p.add_argument("first")
    p.add_argument("second")

    p = with_json(
        sub.add_parser("embed-check", help="injectivity/immersion of a curve")
    )
    p.add_argument("first", help="first component, a polynomial in x (the parameter)")
    p.add_argument("second", help="second component")

    p = with_json(sub.add_parser("rectify", help="straighten an embedded line"))
    p.add_argument("first")
    p.add_argument("second")

    p = with_json(
        sub.add_parser(
            "prove-line",
            help="certified inverse of a Keller map injective on a line",
        )
    )
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument(
        "--line",
        required=True,
        metavar="a,b,c",
        help="line a*x + b*y + c = 0 as three comma-separated rationals",
    )
    p.add_argument(
        "--certificate",
        metavar="PATH",
        help="write the JSON certificate to PATH and replay it",
    )

    p = with_json(sub.add_parser("gen-auto", help="generate a random tame word"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--factors", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=3, help="max elementary shift degree")
    p.add_argument("--coeff-bound", type=int, default=5)
    p.add_argument(
        "--affine-probability",
        type=float,
        default=0.25,
        help="chance of an affine factor per slot (0 disables)",
    )
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 3
    as_json = getattr(args, "json", False)

    def report_negative(error_code: str, message: str, extra=None) -> None:
        if as_json:
            payload = {"error": error_code, "message": message}
            if extra:
                payload.update(extra)
            _print_json(payload)
        else:
            print("%s: %s" % (error_code, message))

    try:
        return _COMMANDS[args.command](args)
    except (ParseError, DenominatorZero) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except InvalidLine as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except HypothesisViolated as exc:
        report_negative(exc.reason, str(exc))
        return 2
    except PreconditionViolated as exc:
        report_negative(exc.condition, str(exc))
        return 2
    except JacobianNotConstant as exc:
        report_negative(
            "JacobianNotConstant",
            str(exc),
            {"jacobian": exc.jacobian.render()},
        )
        return 2
    except NotInjectiveOnLine as exc:
        witness = exc.witness.render() if exc.witness is not None else None
        report_negative("NotInjectiveOnLine", str(exc), {"witness": witness})
        return 2
    except NotAnEmbedding as exc:
        report_negative("NotAnEmbedding", str(exc), exc.report.to_json_dict())
        return 2
    except (AbhyankarMohViolation, TheoremViolationWitness) as exc:
        print("internal contradiction: %s" % exc, file=sys.stderr)
        return 4


def entry() -> None:
    raise SystemExit(main())
