"""Expression grammar for elements and scalars.

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | atom
    atom    := rational | power | gen | sigma | "(" expr ")"
    rational:= INT ("/" INT)?
    power   := ("t" | "s") ("^" exponent)?
    exponent:= INT | "(" "-"? INT ("/" INT)? ")"
    gen     := "y" "[" INT "," INT "]"
    sigma   := "sigma" "[" INT "]" ("^" "-"? INT)? "(" expr ")"

Scalars are rational functions of t^(1/2); both t^(k/2) and s^k spellings
are accepted.  Parse errors carry the offending position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import braid as braid_mod
from .algebra import Element, generator
from .coeffs import RationalFunction

__all__ = ["ParseError", "parse_element", "parse_scalar"]


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|([\[\],()+\-*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0],
                             len(text) - len(stripped))
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("sym", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, c):
        self.text = text
        self.c = c
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def next(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError("expected %r, found %r" % (want, tok[1]), tok[2])
        return tok

    def at_sym(self, value):
        tok = self.peek()
        return tok[0] == "sym" and tok[1] == value

    # -- grammar -------------------------------------------------------------

    def parse(self):
        el = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("trailing input starting with %r" % (tok[1],), tok[2])
        return el

    def expr(self):
        el = self.term()
        while True:
            if self.at_sym("+"):
                self.next()
                el = el + self.term()
            elif self.at_sym("-"):
                self.next()
                el = el - self.term()
            else:
                return el

    def term(self):
        el = self.factor()
        while self.at_sym("*"):
            self.next()
            el = el * self.factor()
        return el

    def factor(self):
        if self.at_sym("-"):
            self.next()
            return -self.factor()
        return self.atom()

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            return Element.one().scale(self.rational())
        if tok[0] == "sym" and tok[1] == "(":
            self.next()
            el = self.expr()
            self.expect("sym", ")")
            return el
        if tok[0] == "name":
            name = tok[1]
            if name in ("t", "s"):
                self.next()
                return Element.one().scale(self.power(name))
            if name == "y":
                return self.gen()
            if name == "sigma":
                return self.sigma()
            raise ParseError("unknown name %r" % name, tok[2])
        raise ParseError("expected a value, found %r" % (tok[1],), tok[2])

    def rational(self):
        tok = self.expect("int")
        value = Fraction(tok[1])
        if self.at_sym("/"):
            save = self.k
            self.next()
            den = self.peek()
            if den[0] == "int":
                self.next()
                if den[1] == 0:
                    raise ParseError("division by zero", den[2])
                value /= den[1]
            else:
                self.k = save
        return RationalFunction._coerce(value)

    def power(self, name):
        exp = Fraction(1)
        if self.at_sym("^"):
            self.next()
            exp = self.exponent()
        if name == "s":
            exp = exp / 2  # s = t^(1/2)
        if (2 * exp).denominator != 1:
            raise ParseError("exponent %s is not a half-integer of t" % exp,
                             self.peek()[2])
        return RationalFunction.t_power(exp)

    def exponent(self):
        tok = self.peek()
        if tok[0] == "int":
            self.next()
            return Fraction(tok[1])
        if tok[0] == "sym" and tok[1] == "(":
            self.next()
            sign = 1
            if self.at_sym("-"):
                self.next()
                sign = -1
            num = self.expect("int")[1]
            den = 1
            if self.at_sym("/"):
                self.next()
                den = self.expect("int")[1]
                if den == 0:
                    raise ParseError("division by zero in exponent", tok[2])
            self.expect("sym", ")")
            return Fraction(sign * num, den)
        if tok[0] == "sym" and tok[1] == "-":
            self.next()
            num = self.expect("int")[1]
            return Fraction(-num)
        raise ParseError("expected an exponent, found %r" % (tok[1],), tok[2])

    def gen(self):
        tok = self.expect("name", "y")
        if self.c is None:
            raise ParseError("generators need a Cartan context", tok[2])
        self.expect("sym", "[")
        i = self._signed_int()
        self.expect("sym", ",")
        m = self._signed_int()
        close = self.expect("sym", "]")
        try:
            return generator(i, m, self.c)
        except ValueError as exc:
            raise ParseError(str(exc), tok[2]) from exc

    def sigma(self):
        tok = self.expect("name", "sigma")
        if self.c is None:
            raise ParseError("braid letters need a Cartan context", tok[2])
        self.expect("sym", "[")
        i = self.expect("int")[1]
        self.expect("sym", "]")
        power = 1
        if self.at_sym("^"):
            self.next()
            sign = 1
            if self.at_sym("-"):
                self.next()
                sign = -1
            power = sign * self.expect("int")[1]
        self.expect("sym", "(")
        el = self.expr()
        self.expect("sym", ")")
        try:
            self.c.check_index(i)
        except ValueError as exc:
            raise ParseError(str(exc), tok[2]) from exc
        if power == 0:
            return el
        word = ((i, 1 if power > 0 else -1),) * abs(power)
        return braid_mod.apply(word, el, self.c)

    def _signed_int(self):
        sign = 1
        if self.at_sym("-"):
            self.next()
            sign = -1
        return sign * self.expect("int")[1]


def parse_element(text, c=None):
    """Parse an element expression; c binds y[i,m] and sigma[i] indices."""
    return _Parser(text, c).parse()


def parse_scalar(text):
    """Parse a scalar (no generators or braid letters)."""
    el = parse_element(text, None)
    terms = dict(el.terms())
    if not terms:
        return RationalFunction.zero()
    if set(terms) != {()}:
        raise ParseError("expected a scalar expression", 0)
    return terms[()]
