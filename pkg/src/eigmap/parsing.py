"""Parsing and printing of polynomial expressions.

Grammar (whitespace insignificant, one variable per expression):

    expr     := ['-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | var | '(' expr ')'
    rational := uint ('/' uint)?

Printing produces the canonical form that parses back bit-exactly:
descending powers, rationals in lowest terms with positive
denominator, GF(p) coefficients as least nonnegative residues.
"""

from .fields import FieldError
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokenizer:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0
        self.tokens = []
        self._scan()
        self.idx = 0

    def _scan(self):
        s = self.src
        i = 0
        while i < len(s):
            ch = s[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(s) and s[j].isdigit():
                    j += 1
                self.tokens.append(("int", s[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                    j += 1
                self.tokens.append(("name", s[i:j], i))
                i = j
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)
        self.tokens.append(("end", "", len(s)))

    def peek(self):
        return self.tokens[self.idx]

    def next(self):
        tok = self.tokens[self.idx]
        if tok[0] != "end":
            self.idx += 1
        return tok


class _Parser:
    def __init__(self, src: str, field, var: str):
        self.toks = _Tokenizer(src)
        self.field = field
        self.var = var

    def parse(self) -> Poly:
        p = self._expr()
        kind, text, pos = self.toks.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {text!r}", pos)
        return p

    def _expr(self) -> Poly:
        negate = False
        if self.toks.peek()[0] == "-":
            self.toks.next()
            negate = True
        acc = self._term()
        if negate:
            acc = -acc
        while self.toks.peek()[0] in ("+", "-"):
            op = self.toks.next()[0]
            rhs = self._term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _term(self) -> Poly:
        acc = self._factor()
        while self.toks.peek()[0] == "*":
            self.toks.next()
            acc = acc * self._factor()
        return acc

    def _factor(self) -> Poly:
        base = self._base()
        if self.toks.peek()[0] == "^":
            self.toks.next()
            kind, text, pos = self.toks.next()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** int(text)
        return base

    def _base(self) -> Poly:
        kind, text, pos = self.toks.next()
        if kind == "int":
            num = int(text)
            if self.toks.peek()[0] == "/":
                self.toks.next()
                dkind, dtext, dpos = self.toks.next()
                if dkind != "int":
                    raise ParseError("denominator must be an integer", dpos)
                den = int(dtext)
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                try:
                    value = self.field.from_fraction(num, den)
                except FieldError as exc:
                    raise ParseError(str(exc), dpos) from None
                return Poly.constant(self.field, value)
            return Poly.constant(self.field, self.field.from_int(num))
        if kind == "name":
            if text != self.var:
                raise ParseError(
                    f"unknown variable {text!r} (expected {self.var!r})", pos
                )
            return Poly.variable(self.field)
        if kind == "(":
            p = self._expr()
            kind2, _, pos2 = self.toks.next()
            if kind2 != ")":
                raise ParseError("missing closing parenthesis", pos2)
            return p
        raise ParseError(f"unexpected token {text!r}", pos)


def parse_poly(src: str, field, var: str = "x") -> Poly:
    return _Parser(src, field, var).parse()


def parse_scalar(src: str, field):
    p = parse_poly(src, field, var="_none_")
    if not p.is_constant():
        raise ParseError("expected a scalar", 0)
    return p.coeff(0)


def _coeff_str(field, c) -> str:
    return field.to_str(c)


def poly_to_str(p: Poly, var: str = "x") -> str:
    """Canonical expression string, descending powers."""
    if p.is_zero():
        return "0"
    field = p.field
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if field.is_zero(c):
            continue
        text = _coeff_str(field, c)
        negative = text.startswith("-")
        mag = text[1:] if negative else text
        if k == 0:
            body = mag
        else:
            xpow = var if k == 1 else f"{var}^{k}"
            body = xpow if mag == "1" else f"{mag}*{xpow}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"-{body}" if negative else f"+{body}")
    return "".join(parts)
