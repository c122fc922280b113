"""Parsers for the CLI grammars.

Ring specs:

    Zn:<n>
    prod(<spec>, <spec>, ...)
    quot(<spec>, I(<g1>, <g2>, ...))
    loc(<spec>, S(<s1>, ...))

Generators and set members are element ids in the canonical encoding of the
base ring.  All grammars ignore whitespace.  Predicate expressions for the
search command combine flag names with & | ! and parentheses.
"""

from __future__ import annotations

from typing import Callable, Collection

from absorb.errors import SpecSyntaxError
from absorb.ideals import ideal_from_generators
from absorb.phimaps import parse_phi_spec  # noqa: F401  (re-export for the CLI)
from absorb.rings import (
    FiniteRing,
    make_localization,
    make_mult_set,
    make_product,
    make_quotient,
    make_zn,
)


def parse_ring_spec(text: str) -> FiniteRing:
    s = "".join(text.split())
    ring, rest = _parse_ring(s)
    if rest:
        raise SpecSyntaxError(f"trailing input {rest!r} in ring spec {text!r}")
    return ring


def _parse_int(s: str) -> tuple[int, str]:
    k = 0
    while k < len(s) and s[k].isdigit():
        k += 1
    if k == 0:
        raise SpecSyntaxError(f"expected an integer near {s!r}")
    return int(s[:k]), s[k:]


def _parse_int_list(s: str, close: str = ")") -> tuple[list[int], str]:
    values: list[int] = []
    if s.startswith(close):
        return values, s[1:]
    while True:
        v, s = _parse_int(s)
        values.append(v)
        if s.startswith(","):
            s = s[1:]
            continue
        if s.startswith(close):
            return values, s[1:]
        raise SpecSyntaxError(f"expected ',' or '{close}' near {s!r}")


def _parse_ring(s: str) -> tuple[FiniteRing, str]:
    if s.startswith("Zn:"):
        n, rest = _parse_int(s[3:])
        return make_zn(n), rest
    if s.startswith("prod("):
        rest = s[5:]
        factors = []
        while True:
            ring, rest = _parse_ring(rest)
            factors.append(ring)
            if rest.startswith(","):
                rest = rest[1:]
                continue
            if rest.startswith(")"):
                return make_product(factors), rest[1:]
            raise SpecSyntaxError(f"expected ',' or ')' near {rest!r}")
    if s.startswith("quot("):
        base, rest = _parse_ring(s[5:])
        if not rest.startswith(",I("):
            raise SpecSyntaxError(f"quot needs ', I(...)' near {rest!r}")
        gens, rest = _parse_int_list(rest[3:])
        if not rest.startswith(")"):
            raise SpecSyntaxError(f"expected ')' near {rest!r}")
        for g in gens:
            base.check_element(g)
        return make_quotient(base, ideal_from_generators(base, gens)), rest[1:]
    if s.startswith("loc("):
        base, rest = _parse_ring(s[4:])
        if not rest.startswith(",S("):
            raise SpecSyntaxError(f"loc needs ', S(...)' near {rest!r}")
        gens, rest = _parse_int_list(rest[3:])
        if not rest.startswith(")"):
            raise SpecSyntaxError(f"expected ')' near {rest!r}")
        for g in gens:
            base.check_element(g)
        return make_localization(base, make_mult_set(base, gens)), rest[1:]
    raise SpecSyntaxError(f"unrecognized ring spec near {s!r}")


# ---------------------------------------------------------------------------
# predicate expressions

def parse_predicate_expr(text: str, allowed: Collection[str]) -> Callable[[dict], bool]:
    """Compile a boolean flag expression to an evaluator over a flag dict.

    Grammar (loosest binding first): or := and ('|' and)*, and := not ('&'
    not)*, not := '!' not | flag | '(' or ')'.  Unknown flag names are
    rejected at parse time.  A None flag value (predicate undefined for the
    ideal at hand) evaluates as False.
    """
    tokens = _tokenize_expr(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_or():
        node = parse_and()
        while peek() == "|":
            take()
            rhs = parse_and()
            node = (lambda a, b: lambda f: a(f) or b(f))(node, rhs)
        return node

    def parse_and():
        node = parse_not()
        while peek() == "&":
            take()
            rhs = parse_not()
            node = (lambda a, b: lambda f: a(f) and b(f))(node, rhs)
        return node

    def parse_not():
        if peek() == "!":
            take()
            inner = parse_not()
            return lambda f: not inner(f)
        return parse_atom()

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_or()
            if take() != ")":
                raise SpecSyntaxError(f"unbalanced parentheses in {text!r}")
            return node
        if tok is None or tok in "&|!()":
            raise SpecSyntaxError(f"unexpected token {tok!r} in {text!r}")
        if tok not in allowed:
            raise SpecSyntaxError(
                f"unknown flag {tok!r}; known flags: {', '.join(sorted(allowed))}"
            )
        return lambda f, name=tok: bool(f[name])

    node = parse_or()
    if pos != len(tokens):
        raise SpecSyntaxError(f"trailing tokens in predicate expression {text!r}")
    return node


def _tokenize_expr(text: str) -> list[str]:
    tokens: list[str] = []
    k = 0
    while k < len(text):
        c = text[k]
        if c.isspace():
            k += 1
            continue
        if c in "&|!()":
            tokens.append(c)
            k += 1
            continue
        if c.isalnum() or c in "_:":
            j = k
            while j < len(text) and (text[j].isalnum() or text[j] in "_:"):
                j += 1
            tokens.append(text[k:j])
            k = j
            continue
        raise SpecSyntaxError(f"bad character {c!r} in predicate expression {text!r}")
    if not tokens:
        raise SpecSyntaxError("empty predicate expression")
    return tokens
