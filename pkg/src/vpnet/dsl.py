"""Textual format for variable Petri nets: parser and canonical serializer.

The format is line-agnostic and keyword-driven::

    net Transfer                     # header, then declarations in any order
    const St1, St2, In/1, f1         # constants, optional /arity (default 1)
    var I, D                         # variables (virtual places)
    place St1, St2, In               # places (must be declared constants)
    trans t2 guard true link true => +I
    arc In -> t2 : I                 # weight: pattern multiset or "empty"
    arc t2 -> I : empty
    gamma I { I_AB }                 # initial constraint function
    marking St1 { f1, f2 }           # initial tokens (repeat for multiplicity)

Comments run from ``#`` to end of line.  Guards use ``==``, ``!=``, ``!``,
``&&``, ``||``, ``true`` and parentheses with precedence ``!`` over ``&&``
over ``||``.  The constant ``eps`` is predeclared and cannot be redeclared.

``parse`` returns a :class:`NetDocument` whose net has passed structural
validation, or raises :class:`ParseError` carrying every diagnostic found;
there is no partial silent success.  ``serialize`` emits canonical text
(sorted declarations, normalized whitespace) such that parsing it yields a
structurally equal net.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    EPSILON,
    KIND_CONSTANT,
    KIND_VARIABLE,
    And,
    ArcExpr,
    BoolLit,
    Cmp,
    Gamma,
    Guard,
    Marking,
    MSet,
    Name,
    Not,
    Or,
    RhoClause,
    TRUE,
    VPNet,
    render_token,
    validate_net,
)

KEYWORDS = {
    "net",
    "const",
    "var",
    "place",
    "trans",
    "guard",
    "link",
    "arc",
    "gamma",
    "marking",
    "empty",
    "true",
}

_PUNCT = ("->", "=>", "==", "!=", "&&", "||", ",", "/", ":", "{", "}", "(", ")", "+", "-", "*", "!")

FILE_EXTENSION = ".vpn"


@dataclass(frozen=True)
class SourceSpan:
    """A 1-based (line, column) position and character length."""

    line: int
    column: int
    length: int

    def __str__(self) -> str:
        return f"line {self.line}, col {self.column}"


@dataclass(frozen=True)
class Diagnostic:
    """One problem found while parsing or validating a document."""

    span: SourceSpan
    message: str

    def __str__(self) -> str:
        return f"{self.span}: {self.message}"


class ParseError(Exception):
    """Raised when a document cannot be parsed into a valid net."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class NetDocument:
    """A parsed net plus the source spans of its declarations.

    ``spans`` maps declaration keys — ``("net", name)``, ``("const", name)``,
    ``("var", name)``, ``("place", name)``, ``("trans", name)``,
    ``("arc", src, dst)``, ``("gamma", var)``, ``("marking", place)`` — to
    the span of the corresponding declaration.
    """

    net: VPNet
    spans: dict


@dataclass(frozen=True)
class _Tok:
    type: str  # "ident", "int", "eof", or the punctuation/keyword itself
    value: str
    span: SourceSpan


def _lex(text: str) -> list:
    toks: list[_Tok] = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        span2 = text[i : i + 2]
        if span2 in ("->", "=>", "==", "!=", "&&", "||"):
            toks.append(_Tok(span2, span2, SourceSpan(line, col, 2)))
            i += 2
            col += 2
            continue
        if ch in ",/:{}()+-*!":
            toks.append(_Tok(ch, ch, SourceSpan(line, col, 1)))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("int", text[i:j], SourceSpan(line, col, j - i)))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "ident"
            toks.append(_Tok(kind, word, SourceSpan(line, col, j - i)))
            col += j - i
            i = j
            continue
        raise ParseError([Diagnostic(SourceSpan(line, col, 1), f"unexpected character {ch!r}")])
    toks.append(_Tok("eof", "", SourceSpan(line, col, 1)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.pos = 0
        # raw declarations, resolved after the full scan
        self.net_name = None
        self.net_span = SourceSpan(1, 1, 1)
        self.consts: dict[str, tuple] = {}  # name -> (arity, span)
        self.vars: dict[str, SourceSpan] = {}
        self.places: dict[str, SourceSpan] = {}
        self.trans: dict[str, tuple] = {}  # name -> (guard, clauses, span)
        self.arcs: dict[tuple, tuple] = {}  # (src, dst) -> (expr, span)
        self.gammas: dict[str, tuple] = {}  # var -> (members, span)
        self.markings: dict[str, tuple] = {}  # place -> (tokens, span)
        self.refs: list[tuple] = []  # (name, span, what-it-must-be)
        self.errors: list[Diagnostic] = []

    # -- token plumbing --
    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        tok = self.toks[self.pos]
        if tok.type != "eof":
            self.pos += 1
        return tok

    def accept(self, ttype: str):
        if self.peek().type == ttype:
            return self.take()
        return None

    def expect(self, ttype: str, what: str = "") -> _Tok:
        tok = self.peek()
        if tok.type != ttype:
            want = what or f"'{ttype}'"
            found = "end of input" if tok.type == "eof" else f"'{tok.value}'"
            raise ParseError([Diagnostic(tok.span, f"expected {want}, found {found}")])
        return self.take()

    def ident(self, what: str = "identifier") -> _Tok:
        return self.expect("ident", what)

    def fail(self, span: SourceSpan, message: str):
        raise ParseError([Diagnostic(span, message)])

    def error(self, span: SourceSpan, message: str):
        self.errors.append(Diagnostic(span, message))

    # -- grammar --
    def parse_document(self) -> NetDocument:
        self.expect("net", "'net' header")
        tok = self.ident("net name")
        self.net_name = tok.value
        self.net_span = tok.span
        while self.peek().type != "eof":
            self.parse_decl()
        return self.resolve()

    def parse_decl(self):
        tok = self.peek()
        handler = {
            "const": self.parse_const,
            "var": self.parse_var,
            "place": self.parse_place,
            "trans": self.parse_trans,
            "arc": self.parse_arc,
            "gamma": self.parse_gamma,
            "marking": self.parse_marking,
        }.get(tok.type)
        if handler is None:
            found = "end of input" if tok.type == "eof" else f"'{tok.value}'"
            self.fail(tok.span, f"expected a declaration keyword, found {found}")
        self.take()
        handler()

    def declare(self, table: dict, tok: _Tok, what: str, payload):
        if tok.value == EPSILON:
            self.error(tok.span, f"'{EPSILON}' is reserved and cannot be declared")
            return
        for existing, label in (
            (self.consts, "constant"),
            (self.vars, "variable"),
            (self.trans, "transition"),
        ):
            if existing is not table and tok.value in existing:
                self.error(tok.span, f"{tok.value} is already declared as a {label}")
                return
        if tok.value in table:
            self.error(tok.span, f"duplicate {what} declaration: {tok.value}")
            return
        table[tok.value] = payload

    def parse_const(self):
        while True:
            tok = self.ident("constant name")
            arity = 1
            if self.accept("/"):
                itok = self.expect("int", "arity")
                arity = int(itok.value)
                if arity < 1:
                    self.error(itok.span, "arity must be at least 1")
                    arity = 1
            self.declare(self.consts, tok, "constant", (arity, tok.span))
            if not self.accept(","):
                break

    def parse_var(self):
        while True:
            tok = self.ident("variable name")
            self.declare(self.vars, tok, "variable", tok.span)
            if not self.accept(","):
                break

    def parse_place(self):
        while True:
            tok = self.ident("place name")
            if tok.value in self.places:
                self.error(tok.span, f"duplicate place declaration: {tok.value}")
            else:
                self.places[tok.value] = tok.span
                self.refs.append((tok.value, tok.span, "constant"))
            if not self.accept(","):
                break

    def parse_trans(self):
        tok = self.ident("transition name")
        guard = TRUE
        clauses: list[RhoClause] = []
        if self.accept("guard"):
            guard = self.parse_bexpr()
        if self.accept("link"):
            while True:
                cond = self.parse_bexpr()
                self.expect("=>", "'=>'")
                sign = self.peek()
                if sign.type in ("+", "-"):
                    self.take()
                else:
                    self.fail(sign.span, f"expected '+' or '-', found '{sign.value}'")
                target = self.ident("link target variable")
                self.refs.append((target.value, target.span, "link-target"))
                clauses.append(RhoClause(cond, ((target.value, sign.type),)))
                if not self.accept(","):
                    break
        self.declare(self.trans, tok, "transition", (guard, tuple(clauses), tok.span))

    def parse_arc(self):
        src = self.ident("arc source")
        self.refs.append((src.value, src.span, "endpoint"))
        self.expect("->", "'->'")
        dst = self.ident("arc target")
        self.refs.append((dst.value, dst.span, "endpoint"))
        self.expect(":", "':'")
        expr = self.parse_weight()
        key = (src.value, dst.value)
        if key in self.arcs:
            self.error(src.span, f"duplicate arc {src.value} -> {dst.value}")
        else:
            self.arcs[key] = (expr, src.span)

    def parse_weight(self) -> ArcExpr:
        if self.accept("empty"):
            return ArcExpr()
        terms = []
        while True:
            count = 1
            if self.peek().type == "int":
                itok = self.take()
                count = int(itok.value)
                if count < 1:
                    self.error(itok.span, "weight multiplicity must be at least 1")
                    count = 1
                self.expect("*", "'*'")
            terms.append((self.parse_tuple(), count))
            if not self.accept("+"):
                break
        return ArcExpr(tuple(terms))

    def parse_tuple(self) -> tuple:
        if self.accept("("):
            parts = []
            while True:
                tok = self.ident("tuple component")
                self.refs.append((tok.value, tok.span, "name"))
                parts.append(tok.value)
                if not self.accept(","):
                    break
            self.expect(")", "')'")
            return tuple(parts)
        tok = self.ident("name")
        self.refs.append((tok.value, tok.span, "name"))
        return (tok.value,)

    # guard expressions; precedence: ! over && over ||
    def parse_bexpr(self) -> Guard:
        node = self.parse_band()
        while self.accept("||"):
            node = Or(node, self.parse_band())
        return node

    def parse_band(self) -> Guard:
        node = self.parse_batom()
        while self.accept("&&"):
            node = And(node, self.parse_batom())
        return node

    def parse_batom(self) -> Guard:
        if self.accept("!"):
            return Not(self.parse_batom())
        if self.accept("true"):
            return BoolLit(True)
        if self.accept("("):
            node = self.parse_bexpr()
            self.expect(")", "')'")
            return node
        lhs = self.ident("guard operand")
        self.refs.append((lhs.value, lhs.span, "name"))
        op = self.peek()
        if op.type not in ("==", "!="):
            self.fail(op.span, f"expected '==' or '!=', found '{op.value or 'end of input'}'")
        self.take()
        rhs = self.ident("guard operand")
        self.refs.append((rhs.value, rhs.span, "name"))
        return Cmp(lhs.value, op.type, rhs.value)

    def parse_gamma(self):
        var = self.ident("variable name")
        self.refs.append((var.value, var.span, "variable"))
        self.expect("{", "'{'")
        members = []
        while True:
            tok = self.ident("constant name")
            self.refs.append((tok.value, tok.span, "constant"))
            members.append(tok.value)
            if not self.accept(","):
                break
        self.expect("}", "'}'")
        if var.value in self.gammas:
            self.error(var.span, f"duplicate gamma declaration for {var.value}")
        else:
            self.gammas[var.value] = (tuple(members), var.span)

    def parse_marking(self):
        place = self.ident("place name")
        self.refs.append((place.value, place.span, "place"))
        self.expect("{", "'{'")
        tokens = []
        while True:
            tokens.append(self.parse_tuple())
            if not self.accept(","):
                break
        self.expect("}", "'}'")
        if place.value in self.markings:
            self.error(place.span, f"duplicate marking declaration for {place.value}")
        else:
            self.markings[place.value] = (tuple(tokens), place.span)

    # -- resolution --
    def resolve(self) -> NetDocument:
        known_consts = set(self.consts) | {EPSILON}
        for name, span, role in self.refs:
            if role == "endpoint":
                if name not in known_consts and name not in self.vars and name not in self.trans:
                    self.error(span, f"undeclared name {name}")
            elif role == "name":
                if name not in known_consts and name not in self.vars:
                    self.error(span, f"undeclared name {name}")
            elif role == "constant":
                if name not in known_consts:
                    self.error(span, f"undeclared constant {name}")
            elif role in ("variable", "link-target"):
                if name not in self.vars:
                    what = "link target" if role == "link-target" else "variable"
                    self.error(span, f"{name} is not a declared variable ({what})")
            elif role == "place":
                if name not in self.places:
                    self.error(span, f"{name} is not a declared place")
        if self.errors:
            raise ParseError(self.errors)

        sigma = {Name(EPSILON, KIND_CONSTANT, 1)}
        for cname, (arity, _span) in self.consts.items():
            if cname != EPSILON:
                sigma.add(Name(cname, KIND_CONSTANT, arity))
        for vname in self.vars:
            sigma.add(Name(vname, KIND_VARIABLE))

        net = VPNet(
            name=self.net_name,
            sigma=frozenset(sigma),
            places=frozenset(self.places),
            transitions=frozenset(self.trans),
            arcs=frozenset(self.arcs),
            weights={key: expr for key, (expr, _s) in self.arcs.items()},
            guards={t: g for t, (g, _c, _s) in self.trans.items() if g != TRUE},
            rho={t: c for t, (_g, c, _s) in self.trans.items() if c},
            gamma0=Gamma({v: m for v, (m, _s) in self.gammas.items()}),
            m0=Marking({p: MSet.of(*toks) for p, (toks, _s) in self.markings.items()}),
        )

        spans = {("net", self.net_name): self.net_span}
        for cname, (_arity, span) in self.consts.items():
            spans[("const", cname)] = span
        for vname, span in self.vars.items():
            spans[("var", vname)] = span
        for pname, span in self.places.items():
            spans[("place", pname)] = span
        for tname, (_g, _c, span) in self.trans.items():
            spans[("trans", tname)] = span
        for (src, dst), (_e, span) in self.arcs.items():
            spans[("arc", src, dst)] = span
        for vname, (_m, span) in self.gammas.items():
            spans[("gamma", vname)] = span
        for pname, (_t, span) in self.markings.items():
            spans[("marking", pname)] = span

        violations = validate_net(net)
        if violations:
            raise ParseError([self._locate(v, spans) for v in violations])
        return NetDocument(net, spans)

    def _locate(self, violation, spans) -> Diagnostic:
        """Attach the most specific declaration span to a net violation."""
        subject = violation.subject
        candidates = []
        if len(subject) >= 2:
            candidates.append(("arc",) + subject[:2])
            candidates.append(("trans", subject[0]))
            candidates.append(("marking", subject[0]))
            candidates.append(("gamma", subject[0]))
        for name in subject:
            for kind in ("trans", "place", "gamma", "marking", "const", "var"):
                candidates.append((kind, name))
        for key in candidates:
            if key in spans:
                return Diagnostic(spans[key], violation.message)
        return Diagnostic(self.net_span, violation.message)


def parse(text: str) -> NetDocument:
    """Parse DSL text into a validated net; raise ParseError with diagnostics."""
    return _Parser(text).parse_document()


def parse_net(text: str) -> VPNet:
    """Convenience wrapper returning just the net."""
    return parse(text).net


# -- serialization --------------------------------------------------------

def _const_entry(name: str, arity: int) -> str:
    return name if arity == 1 else f"{name}/{arity}"


def serialize(net: VPNet) -> str:
    """Emit canonical DSL text for a net.

    Declarations are sorted by name, whitespace is normalized, weights and
    markings are rendered in canonical multiset order, and the predeclared
    constant ``eps`` is left implicit.  Parsing the output yields a net
    structurally equal to the input.
    """
    lines = [f"net {net.name}"]
    consts = [
        _const_entry(c, a) for c, a in sorted(net.constants.items()) if c != EPSILON
    ]
    if consts:
        lines.append("")
        lines.append(f"const {', '.join(consts)}")
    if net.variables:
        lines.append(f"var {', '.join(sorted(net.variables))}")
    if net.places:
        lines.append(f"place {', '.join(sorted(net.places))}")

    transitions = net.transition_order()
    if transitions:
        lines.append("")
    for t in transitions:
        parts = [f"trans {t}"]
        guard = net.guard(t)
        if guard != TRUE:
            parts.append(f"guard {guard.render()}")
        clauses = net.link_clauses(t)
        if clauses:
            rendered = []
            for clause in clauses:
                for var, direction in clause.ops:
                    rendered.append(f"{clause.condition.render()} => {direction}{var}")
            parts.append(f"link {', '.join(rendered)}")
        lines.append(" ".join(parts))

    arcs = sorted(net.arcs)
    if arcs:
        lines.append("")
    for src, dst in arcs:
        expr = net.weights.get((src, dst), ArcExpr())
        lines.append(f"arc {src} -> {dst} : {expr.render()}")

    gamma_items = net.gamma0.items()
    if gamma_items:
        lines.append("")
    for var, consts_ in gamma_items:
        lines.append(f"gamma {var} {{ {', '.join(consts_)} }}")

    marked = net.m0.nonempty_items()
    if marked:
        lines.append("")
    for place, mset in marked:
        toks = []
        for token, n in mset.items():
            if not isinstance(n, int):
                raise ValueError("cannot serialize an omega marking")
            toks.extend([render_token(token)] * n)
        lines.append(f"marking {place} {{ {', '.join(toks)} }}")
    return "\n".join(lines) + "\n"
