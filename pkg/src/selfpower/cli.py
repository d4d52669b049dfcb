"""Command-line surface: exact parsing of rationals and integer polynomials,
command dispatch, deterministic JSON and human-readable output.

Rationals are rendered as strings ("a/b", plain "a" for integers) so exactness
survives the interface; JSON output is byte-deterministic for a fixed input
and configuration (sorted keys, canonical rendering).  Exit codes: 0 success,
2 parse error, 3 domain or precondition error, 4 resource error; errors are a
single JSON line on stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import replace
from fractions import Fraction

from .certify import Certificate, classify_preimage
from .config import Config
from .errors import DomainError, ParseError, ResourceError
from .minpoly import IntPolynomial, minimal_polynomial_of_self_power
from .polypower import (
    analyze_poly_power,
    enumerate_rational_powers,
    leading_denominator_bound,
    zero_exponent_denominator_bound,
)
from .arith import lambda_decompose
from .solver import (
    AlgebraicTarget,
    commuting_pair,
    denominator_bound,
    equal_self_power_pair,
    solve,
    verify_commuting,
    verify_equal_self_powers,
)

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def _normalize_minus(text: str) -> str:
    # accept the unicode minus sign U+2212 anywhere a hyphen works
    return text.replace("−", "-")


def parse_rational(text: str) -> Fraction:
    """Parse 'a' or 'a/b' with an optional leading minus into a reduced fraction."""
    cleaned = _normalize_minus(text).strip()
    m = _RATIONAL_RE.fullmatch(cleaned)
    if m is None:
        for i, ch in enumerate(cleaned):
            if not (ch.isdigit() or ch in "+-/"):
                raise ParseError(f"not a rational: {text!r}", position=i)
        raise ParseError(f"not a rational: {text!r}", position=len(cleaned))
    if "/" in cleaned:
        num, den = cleaned.split("/", 1)
        if int(den) == 0:
            raise ParseError(
                f"zero denominator in {text!r}", position=cleaned.index("/") + 1
            )
        return Fraction(int(num), int(den))
    return Fraction(int(cleaned))


def format_fraction(q: Fraction) -> str:
    """Canonical rendering 'a/b', with '/b' omitted for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# polynomial parsing: expression grammar and bracketed coefficient lists
# ---------------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, int | str | None, int]]:
    tokens: list[tuple[str, int | str | None, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "xX":
            tokens.append(("x", None, i))
            i += 1
            continue
        if ch in "+-*^":
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", position=i)
    tokens.append(("end", None, n))
    return tokens


# degree ceiling for parsed polynomials; enumeration beyond this is
# infeasible anyway and unbounded exponents would stall the parser
_MAX_DEGREE = 1 << 16


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


class _ExpressionParser:
    # poly := ['+'|'-'] term (('+'|'-') term)*
    # term := factor ('*' factor)*
    # factor := atom ['^' INT]
    # atom := INT | 'x'

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> list[int]:
        coeffs = self.expression()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", position=pos)
        return coeffs

    def expression(self) -> list[int]:
        kind, value, _ = self.peek()
        sign = 1
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        acc = [sign * c for c in self.term()]
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                term = self.term()
                if value == "-":
                    term = [-c for c in term]
                acc = _poly_add(acc, term)
            else:
                return acc

    def term(self) -> list[int]:
        acc = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                acc = _poly_mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> list[int]:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise ParseError(
                    "exponent must be a nonnegative integer", position=pos
                )
            if value > _MAX_DEGREE:
                raise ParseError(
                    f"exponent {value} exceeds the supported degree {_MAX_DEGREE}",
                    position=pos,
                )
            out = [1]
            for _ in range(value):
                out = _poly_mul(out, base)
            return out
        return base

    def atom(self) -> list[int]:
        kind, value, pos = self.take()
        if kind == "int":
            return [value]
        if kind == "x":
            return [0, 1]
        raise ParseError("expected an integer coefficient or x", position=pos)


def _parse_coefficient_list(text: str) -> list[int]:
    if not text.endswith("]"):
        raise ParseError("missing closing ']'", position=len(text))
    inner = text[1:-1].strip()
    if not inner:
        raise ParseError("empty polynomial", position=1)
    coeffs = []
    offset = 1
    for part in inner.split(","):
        token = part.strip()
        if not re.fullmatch(r"[+-]?\d+", token):
            raise ParseError(
                f"bad integer coefficient {part.strip()!r}",
                position=text.index(part, offset),
            )
        coeffs.append(int(token))
        offset = text.index(part, offset) + len(part)
    return coeffs


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse '9*x^3 - 4' or the coefficient list '[-4, 0, 0, 9]' (constant first).

    Both forms produce identical polynomials; like terms are collected.
    """
    cleaned = _normalize_minus(text).strip()
    if not cleaned:
        raise ParseError("empty polynomial", position=0)
    if cleaned.startswith("["):
        coeffs = _parse_coefficient_list(cleaned)
    else:
        coeffs = _ExpressionParser(cleaned).parse()
    if all(c == 0 for c in coeffs):
        raise ParseError("zero polynomial", position=0)
    return IntPolynomial.from_coefficients(coeffs)


def format_polynomial(poly: IntPolynomial) -> str:
    """Canonical rendering like '9*x^3 - 4'; reparsing gives the same polynomial."""
    parts: list[str] = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpart = "x" if k == 1 else f"x^{k}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _parse_alpha(text: str, config: Config) -> AlgebraicTarget:
    cleaned = _normalize_minus(text).strip()
    if _RATIONAL_RE.fullmatch(cleaned):
        return AlgebraicTarget.from_rational(parse_rational(cleaned))
    return AlgebraicTarget.from_polynomial(parse_polynomial(cleaned), config)


def _describe_target(target: AlgebraicTarget) -> str:
    if target.is_rational:
        return format_fraction(target.value)
    return f"positive root of {format_polynomial(target.root.as_polynomial())}"


def _cmd_solve(args, config: Config):
    target = _parse_alpha(args.alpha, config)
    result = solve(target, config, cross_check=args.verify_both)
    rendered = [format_fraction(x) for x in result.solutions]
    payload = {
        "alpha": _describe_target(target),
        "method": "divisors" if not target.is_rational else "enumeration",
        "scan_count": result.scan_count,
        "solutions": rendered,
    }
    if rendered:
        human = (
            f"x^x = {payload['alpha']}: solutions "
            + ", ".join(rendered)
            + f" ({result.scan_count} tests, {payload['method']})"
        )
    else:
        human = (
            f"x^x = {payload['alpha']}: no positive rational solutions "
            f"({result.scan_count} tests, {payload['method']})"
        )
    return payload, human


def _cmd_minpoly(args, config: Config):
    q = parse_rational(args.fraction)
    if q <= 0:
        raise DomainError(f"need a positive rational, got {format_fraction(q)}")
    binomial = minimal_polynomial_of_self_power(q.numerator, q.denominator, config)
    payload = {"d": binomial.d, "r": binomial.r, "s": binomial.s}
    human = (
        f"minimal polynomial of ({format_fraction(q)})^({format_fraction(q)}): "
        f"{format_polynomial(binomial.as_polynomial())}"
    )
    return payload, human


def _cmd_powcheck(args, config: Config):
    poly = parse_polynomial(args.poly)
    x = parse_rational(args.x)
    if x <= 0:
        raise ParseError(f"x must be positive, got {format_fraction(x)}")
    verdict = analyze_poly_power(poly, x, config)
    value = None if verdict.rational is None else format_fraction(verdict.rational)
    payload = {"exponent": format_fraction(verdict.exponent), "rational": value}
    base = f"({format_fraction(x)})^({format_fraction(verdict.exponent)})"
    human = f"{base} = {value}" if value is not None else f"{base} is irrational"
    return payload, human


def _cmd_powsearch(args, config: Config):
    poly = parse_polynomial(args.poly)
    if args.a_max < 1:
        raise DomainError("--a-max must be >= 1")
    hits = enumerate_rational_powers(poly, args.a_max, args.b_max, config)
    payload = {
        "a_max": args.a_max,
        "bound": leading_denominator_bound(poly.leading_coefficient),
        "hits": [
            {"value": format_fraction(v), "x": format_fraction(x)} for x, v in hits
        ],
    }
    lines = [
        f"rational values of x^({format_polynomial(poly)}) for x = a/b, "
        f"a <= {args.a_max}, 2 <= b <= {args.b_max or payload['bound']}:"
    ]
    lines += [f"  x = {h['x']}: {h['value']}" for h in payload["hits"]]
    if not hits:
        lines.append("  none")
    return payload, "\n".join(lines)


def _cmd_bound(args, config: Config):
    if args.degree is not None:
        if args.degree < 1:
            raise DomainError("--degree must be >= 1")
        value = denominator_bound(args.degree)
        payload = {"bound": value, "degree": args.degree}
        human = f"denominator bound for degree {args.degree}: {value}"
    else:
        if args.leading == 0:
            raise DomainError("--leading must be nonzero")
        value = leading_denominator_bound(args.leading)
        payload = {
            "bound": value,
            "leading": args.leading,
            "zero_exponent_bound": zero_exponent_denominator_bound(args.leading),
        }
        human = (
            f"denominator bound for leading coefficient {args.leading}: {value} "
            f"(zero-exponent case: {payload['zero_exponent_bound']})"
        )
    return payload, human


def _certificate_payload(cert: Certificate) -> dict:
    lo, hi = cert.interval
    return {
        "interval": {
            "hi": format_fraction(hi),
            "lo": format_fraction(lo),
            "width": format_fraction(hi - lo),
        },
        "scan": [[n, order.value] for n, order in cert.integer_scan_trace],
        "statement": cert.statement,
    }


def _cmd_classify(args, config: Config):
    q = parse_rational(args.q)
    result = classify_preimage(q, width=config.bisect_width, config=config)
    if isinstance(result, int):
        payload = {"integer": result, "q": format_fraction(q)}
        human = f"x^x = {format_fraction(q)} has the integer solution x = {result}"
        return payload, human
    payload = {"certificate": _certificate_payload(result), "q": format_fraction(q)}
    lo, hi = result.interval
    human = (
        f"x^x = {format_fraction(q)}: transcendental solution in "
        f"({format_fraction(lo)}, {format_fraction(hi)})\n{result.statement}"
    )
    return payload, human


def _cmd_pairs(args, config: Config):
    if args.m < 1:
        raise DomainError("--m must be >= 1")
    if args.commuting:
        x, y = commuting_pair(args.m, config)
        verified = verify_commuting(x, y)
        relation = "x^y = y^x"
    else:
        x, y = equal_self_power_pair(args.m, config)
        verified = verify_equal_self_powers(x, y)
        relation = "x^x = y^y"
    payload = {
        "commuting": bool(args.commuting),
        "m": args.m,
        "verified": verified,
        "x": format_fraction(x),
        "y": format_fraction(y),
    }
    human = (
        f"m = {args.m}: x = {payload['x']}, y = {payload['y']} "
        f"({relation} {'verified' if verified else 'FAILED'})"
    )
    return payload, human


def _cmd_decompose(args, config: Config):
    lam = lambda_decompose(args.x, args.y, args.a, args.b)
    payload = {"lambda": lam}
    human = (
        f"lambda = {lam}: {lam}^{args.b} = {args.x}, {lam}^{args.a} = {args.y}"
    )
    return payload, human


_COMMANDS = {
    "solve": _cmd_solve,
    "minpoly": _cmd_minpoly,
    "powcheck": _cmd_powcheck,
    "powsearch": _cmd_powsearch,
    "bound": _cmd_bound,
    "classify": _cmd_classify,
    "pairs": _cmd_pairs,
    "decompose": _cmd_decompose,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(
            json.dumps({"error": message, "kind": "parse"}, sort_keys=True),
            file=sys.stderr,
        )
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    common.add_argument(
        "--factor-budget",
        type=int,
        help="factorization effort budget (env XX_FACTOR_BUDGET)",
    )
    common.add_argument(
        "--bit-cap", type=int, help="bit-size cap for huge values (env XX_BIT_CAP)"
    )
    common.add_argument(
        "--seed", type=int, help="seed for randomised factorization (env XX_SEED)"
    )

    parser = _Parser(
        prog="selfpower",
        description="Exact solver and analyzer for x^x = alpha over the rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve x^x = alpha exactly")
    p.add_argument(
        "--alpha",
        required=True,
        help="a rational ('27', '5/2') or a polynomial ('2*x^2 - 1', '[-1, 0, 2]')",
    )
    p.add_argument(
        "--verify-both",
        action="store_true",
        help="run both solution procedures and insist they agree",
    )

    p = sub.add_parser(
        "minpoly", parents=[common], help="minimal polynomial of (a/b)^(a/b)"
    )
    p.add_argument("fraction", help="positive rational a/b in lowest terms")

    p = sub.add_parser(
        "powcheck", parents=[common], help="is x^P(x) rational for this x?"
    )
    p.add_argument("--poly", required=True, help="integer polynomial P")
    p.add_argument("--x", required=True, help="positive rational x")

    p = sub.add_parser(
        "powsearch", parents=[common], help="sweep x = a/b for rational x^P(x)"
    )
    p.add_argument("--poly", required=True, help="integer polynomial P")
    p.add_argument("--a-max", type=int, required=True, help="numerator sweep limit")
    p.add_argument(
        "--b-max",
        type=int,
        help="denominator sweep limit (defaults to the proven bound)",
    )

    p = sub.add_parser("bound", parents=[common], help="denominator bounds")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int, help="degree of alpha")
    group.add_argument("--leading", type=int, help="leading coefficient of P")

    p = sub.add_parser(
        "classify", parents=[common], help="integer preimage or transcendence certificate"
    )
    p.add_argument("--q", required=True, help="rational q > 1")
    p.add_argument(
        "--width",
        help="isolating interval width as a rational (default 1/1000000000)",
    )

    p = sub.add_parser(
        "pairs", parents=[common], help="the x^x = y^y and x^y = y^x families"
    )
    p.add_argument("--m", type=int, required=True, help="family index m >= 1")
    p.add_argument(
        "--commuting",
        action="store_true",
        help="emit the reciprocal pair solving x^y = y^x",
    )

    p = sub.add_parser(
        "decompose", parents=[common], help="common base of x^a = y^b"
    )
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    return parser


def _build_config(args) -> Config:
    config = Config.from_env()
    overrides = {}
    if args.factor_budget is not None:
        overrides["factor_budget"] = args.factor_budget
    if args.bit_cap is not None:
        overrides["bit_cap"] = args.bit_cap
    if args.seed is not None:
        overrides["seed"] = args.seed
    if getattr(args, "width", None) is not None:
        width = parse_rational(args.width)
        if width <= 0:
            raise DomainError("--width must be positive")
        overrides["bisect_width"] = width
    return replace(config, **overrides) if overrides else config


def _fail(exc: Exception, kind: str, code: int) -> "SystemExit":
    print(json.dumps({"error": str(exc), "kind": kind}, sort_keys=True), file=sys.stderr)
    return SystemExit(code)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _build_config(args)
        payload, human = _COMMANDS[args.command](args, config)
    except ParseError as exc:
        raise _fail(exc, "parse", 2) from exc
    except ResourceError as exc:
        raise _fail(exc, "resource", 4) from exc
    except DomainError as exc:
        raise _fail(exc, "domain", 3) from exc
    print(json.dumps(payload, sort_keys=True) if args.json else human)
    return 0


if __name__ == "__main__":
    sys.exit(main())
