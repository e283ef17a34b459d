"""Core data model for variable Petri nets.

A variable Petri net extends a colored place/transition net with *virtual
places*: variables that may stand in for places as arc endpoints.  Which
constants a variable may currently denote is tracked by the constraint
function gamma, and transitions rewrite gamma through link clauses as they
fire, so the set of places (and the wiring between them) evolves at run
time.

This module defines the immutable value types shared by every other
module: names, tuple tokens, omega-aware multisets, arc expressions,
guards, link clauses, gamma, markings, whole nets and configurations,
plus structural validation.  Everything is hashable and canonically
ordered so that state-space construction, serialization and analyses are
deterministic from run to run.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

#: Reserved spelling of the neutral "no data" constant.  It is always a
#: member of the constant universe, with arity 1, and cannot be redeclared.
EPSILON = "eps"

KIND_CONSTANT = "constant"
KIND_VARIABLE = "variable"


class _Omega:
    """The unbounded token count.

    Arithmetic follows the coverability conventions: omega + a = omega,
    omega - a = omega for finite a, a <= omega for every a, and
    omega <= omega.  A single instance (``OMEGA``) is used everywhere.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "omega"

    # -- ordering (ints defer to these via reflected operators) --
    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Omega)

    def __gt__(self, other):
        return not isinstance(other, _Omega)

    def __ge__(self, other):
        return True

    # -- arithmetic --
    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _Omega):
            raise ArithmeticError("omega - omega is undefined")
        return self

    def __mul__(self, other):
        if other == 0:
            return 0
        return self

    __rmul__ = __mul__

    def __hash__(self):
        # Fixed value: never let set/dict ordering depend on the process.
        return 0x0E6A


OMEGA = _Omega()

#: A token count: a non-negative int or OMEGA.
Count = object

#: A token is a tuple of constant names; a bare constant is the 1-tuple.
Token = tuple

#: A pattern is a tuple of names (constants or variables) to be matched
#: against tokens componentwise.
Pattern = tuple


def as_token(value) -> Token:
    """Coerce a bare name or a sequence of names to a token tuple."""
    if isinstance(value, str):
        return (value,)
    tok = tuple(value)
    if not tok or not all(isinstance(part, str) for part in tok):
        raise ValueError(f"not a token: {value!r}")
    return tok


def render_token(token: Token) -> str:
    """Canonical text of a token: ``f1`` or ``(R2,D2)``."""
    if len(token) == 1:
        return token[0]
    return "(" + ",".join(token) + ")"


def count_sort_key(count) -> tuple:
    """Sort key placing omega after every finite count."""
    if isinstance(count, _Omega):
        return (1, 0)
    return (0, count)


class MSet:
    """An immutable multiset of tuple tokens with omega-valued counts."""

    __slots__ = ("_counts", "_hashcache")

    def __init__(self, counts=None):
        merged: dict[Token, object] = {}
        if counts is not None:
            items = counts.items() if isinstance(counts, dict) else counts
            for raw_token, n in items:
                token = as_token(raw_token)
                if isinstance(n, _Omega):
                    merged[token] = OMEGA
                    continue
                if not isinstance(n, int) or n < 0:
                    raise ValueError(f"bad multiset count for {token}: {n!r}")
                if n == 0:
                    continue
                merged[token] = merged.get(token, 0) + n
        object.__setattr__(self, "_counts", dict(sorted(merged.items())))
        object.__setattr__(self, "_hashcache", None)

    @classmethod
    def of(cls, *tokens) -> "MSet":
        """Multiset counting each given token once (repeats allowed)."""
        return cls([(tok, 1) for tok in tokens])

    def __setattr__(self, name, value):
        raise AttributeError("MSet is immutable")

    # -- queries --
    def items(self) -> tuple:
        """Sorted (token, count) pairs."""
        return tuple(self._counts.items())

    def tokens(self) -> tuple:
        """Sorted distinct tokens."""
        return tuple(self._counts.keys())

    def count(self, token) -> object:
        return self._counts.get(as_token(token), 0)

    def __contains__(self, token) -> bool:
        return as_token(token) in self._counts

    @property
    def is_empty(self) -> bool:
        return not self._counts

    def __bool__(self) -> bool:
        return bool(self._counts)

    @property
    def has_omega(self) -> bool:
        return any(isinstance(n, _Omega) for n in self._counts.values())

    def total(self) -> object:
        """Total token count; omega if any count is omega."""
        total = 0
        for n in self._counts.values():
            total = n + total if isinstance(n, _Omega) else total + n
        return total

    # -- algebra --
    def add(self, other: "MSet") -> "MSet":
        counts = dict(self._counts)
        for token, n in other._counts.items():
            cur = counts.get(token, 0)
            counts[token] = OMEGA if isinstance(cur, _Omega) or isinstance(n, _Omega) else cur + n
        return MSet(counts)

    def sub(self, other: "MSet") -> "MSet":
        """Pointwise difference; ``other`` must be finite and covered by self."""
        counts = dict(self._counts)
        for token, n in other._counts.items():
            if isinstance(n, _Omega):
                raise ArithmeticError("cannot subtract an omega count")
            cur = counts.get(token, 0)
            if isinstance(cur, _Omega):
                continue  # omega - finite = omega
            if cur < n:
                raise ValueError(f"multiset underflow at {render_token(token)}")
            remaining = cur - n
            if remaining:
                counts[token] = remaining
            else:
                del counts[token]
        return MSet(counts)

    def leq(self, other: "MSet") -> bool:
        """Pointwise <=, with a <= omega for every a."""
        for token, n in self._counts.items():
            if not n <= other._counts.get(token, 0):
                return False
        return True

    def scale(self, factor: int) -> "MSet":
        if factor < 0:
            raise ValueError("negative multiset scale")
        if factor == 0:
            return MSet()
        return MSet([(tok, n * factor) for tok, n in self._counts.items()])

    def with_omega(self, token) -> "MSet":
        counts = dict(self._counts)
        counts[as_token(token)] = OMEGA
        return MSet(counts)

    # -- identity --
    def __eq__(self, other) -> bool:
        if not isinstance(other, MSet):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        if self._hashcache is None:
            object.__setattr__(
                self, "_hashcache", hash(tuple(self._counts.items()))
            )
        return self._hashcache

    def sort_key(self) -> tuple:
        return tuple((tok, count_sort_key(n)) for tok, n in self._counts.items())

    def render(self) -> str:
        """Human text such as ``{f1, f2}``, ``{2*eps}`` or ``{omega*eps}``."""
        parts = []
        for token, n in self._counts.items():
            if n == 1:
                parts.append(render_token(token))
            else:
                parts.append(f"{n}*{render_token(token)}")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"MSet{self.render()}"


EMPTY_MSET = MSet()


@dataclass(frozen=True)
class Name:
    """A declared symbol: a constant (with place arity) or a variable."""

    text: str
    kind: str
    arity: int = 1

    def __post_init__(self):
        if not IDENT_RE.match(self.text):
            raise ValueError(f"invalid identifier: {self.text!r}")
        if self.kind not in (KIND_CONSTANT, KIND_VARIABLE):
            raise ValueError(f"invalid name kind: {self.kind!r}")
        if self.arity < 1:
            raise ValueError(f"arity must be positive: {self.text}/{self.arity}")
        if self.kind == KIND_VARIABLE and self.arity != 1:
            raise ValueError("variables carry no arity")


@dataclass(frozen=True)
class ArcExpr:
    """The weight of an arc: a multiset of patterns, or the empty expression.

    ``terms`` holds (pattern, count) pairs with positive counts, kept
    sorted.  The empty expression (no terms) is written ``empty`` in the
    DSL and is only legal on transition-to-variable arcs, where it creates
    or links a place without moving tokens.
    """

    terms: tuple = ()

    def __post_init__(self):
        norm: dict[Pattern, int] = {}
        for pattern, n in self.terms:
            pat = as_token(pattern)
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"bad pattern count: {n!r}")
            norm[pat] = norm.get(pat, 0) + n
        object.__setattr__(self, "terms", tuple(sorted(norm.items())))

    @classmethod
    def of(cls, *patterns) -> "ArcExpr":
        return cls(tuple((as_token(p), 1) for p in patterns))

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def names(self) -> tuple:
        """Sorted distinct names occurring in the patterns."""
        seen = set()
        for pattern, _ in self.terms:
            seen.update(pattern)
        return tuple(sorted(seen))

    def substitute(self, binding: dict, variables) -> MSet:
        """Instantiate patterns under ``binding`` into a token multiset.

        ``variables`` is the set of names to treat as variables; every
        variable occurring here must be bound.
        """
        out: list = []
        for pattern, n in self.terms:
            parts = []
            for name in pattern:
                if name in variables:
                    if name not in binding:
                        raise UnboundVariableError(name)
                    parts.append(binding[name])
                else:
                    parts.append(name)
            out.append((tuple(parts), n))
        return MSet(out)

    def render(self) -> str:
        if self.is_empty:
            return "empty"
        parts = []
        for pattern, n in self.terms:
            text = render_token(pattern)
            parts.append(text if n == 1 else f"{n}*{text}")
        return " + ".join(parts)


EMPTY_EXPR = ArcExpr()


class UnboundVariableError(KeyError):
    """A variable required during evaluation had no binding.

    Outside of deliberately partial user input this indicates a validation
    bug upstream: well-formed nets ground every variable on the input side.
    """

    def __init__(self, variable: str):
        super().__init__(variable)
        self.variable = variable

    def __str__(self) -> str:
        return f"unbound variable {self.variable}"


# -- guards ------------------------------------------------------------

class Guard:
    """Base class for guard expressions over name equality."""

    __slots__ = ()


@dataclass(frozen=True)
class BoolLit(Guard):
    value: bool

    def render(self) -> str:
        return "true" if self.value else "!true"


@dataclass(frozen=True)
class Cmp(Guard):
    lhs: str
    op: str  # "==" or "!="
    rhs: str

    def __post_init__(self):
        if self.op not in ("==", "!="):
            raise ValueError(f"bad comparison operator: {self.op!r}")

    def render(self) -> str:
        return f"{self.lhs} {self.op} {self.rhs}"


@dataclass(frozen=True)
class Not(Guard):
    arg: Guard

    def render(self) -> str:
        inner = self.arg.render()
        if isinstance(self.arg, (And, Or)):
            inner = f"({inner})"
        return f"!{inner}"


@dataclass(frozen=True)
class And(Guard):
    lhs: Guard
    rhs: Guard

    def render(self) -> str:
        left = self.lhs.render()
        if isinstance(self.lhs, Or):
            left = f"({left})"
        right = self.rhs.render()
        if isinstance(self.rhs, (And, Or)):
            right = f"({right})"
        return f"{left} && {right}"


@dataclass(frozen=True)
class Or(Guard):
    lhs: Guard
    rhs: Guard

    def render(self) -> str:
        left = self.lhs.render()
        right = self.rhs.render()
        if isinstance(self.rhs, Or):
            right = f"({right})"
        return f"{left} || {right}"


TRUE = BoolLit(True)


def guard_names(guard: Guard) -> tuple:
    """Sorted distinct names occurring in the guard's comparisons."""

    def walk(g):
        if isinstance(g, Cmp):
            yield g.lhs
            yield g.rhs
        elif isinstance(g, Not):
            yield from walk(g.arg)
        elif isinstance(g, (And, Or)):
            yield from walk(g.lhs)
            yield from walk(g.rhs)

    return tuple(sorted(set(walk(guard))))


@dataclass(frozen=True)
class RhoClause:
    """One link clause: when ``condition`` holds, apply the gamma ops.

    Each op is (variable, direction) with direction "+" (link the
    instantiated constant to the variable) or "-" (unlink it).
    """

    condition: Guard
    ops: tuple  # of (variable, "+"|"-")

    def __post_init__(self):
        for var, direction in self.ops:
            if direction not in ("+", "-"):
                raise ValueError(f"bad link direction: {direction!r}")
            if not IDENT_RE.match(var):
                raise ValueError(f"invalid link target: {var!r}")


# -- gamma -------------------------------------------------------------

class Gamma:
    """The constraint function: variable -> set of constants it may denote.

    Variables absent from the mapping are constrained to the empty set;
    the NULL gamma maps every variable to the empty set.  Instances are
    immutable; updates return new objects.
    """

    __slots__ = ("_links", "_hashcache")

    def __init__(self, links=None):
        norm: dict[str, frozenset] = {}
        if links is not None:
            items = links.items() if isinstance(links, dict) else links
            for var, consts in items:
                cs = frozenset(consts)
                if cs:
                    norm[var] = norm.get(var, frozenset()) | cs
        object.__setattr__(self, "_links", dict(sorted(norm.items())))
        object.__setattr__(self, "_hashcache", None)

    def __setattr__(self, name, value):
        raise AttributeError("Gamma is immutable")

    def get(self, var: str) -> frozenset:
        return self._links.get(var, frozenset())

    def items(self) -> tuple:
        """Sorted (variable, sorted constants tuple) pairs; empty sets omitted."""
        return tuple((v, tuple(sorted(cs))) for v, cs in self._links.items())

    def variables(self) -> tuple:
        return tuple(self._links.keys())

    def links(self) -> tuple:
        """Sorted (variable, constant) pairs."""
        return tuple(
            (v, c) for v, cs in self._links.items() for c in sorted(cs)
        )

    @property
    def is_null(self) -> bool:
        return not self._links

    def add(self, var: str, const: str) -> "Gamma":
        if const in self._links.get(var, frozenset()):
            return self
        links = dict(self._links)
        links[var] = links.get(var, frozenset()) | {const}
        return Gamma(links)

    def remove(self, var: str, const: str) -> "Gamma":
        if const not in self._links.get(var, frozenset()):
            return self
        links = dict(self._links)
        links[var] = links[var] - {const}
        return Gamma(links)

    def diff(self, other: "Gamma") -> "Gamma":
        """Per-variable set difference self - other (empty results dropped)."""
        return Gamma(
            {v: cs - other.get(v) for v, cs in self._links.items()}
        )

    def union(self, other: "Gamma") -> "Gamma":
        merged = dict(self._links)
        for v, cs in other._links.items():
            merged[v] = merged.get(v, frozenset()) | cs
        return Gamma(merged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gamma):
            return NotImplemented
        return self._links == other._links

    def __hash__(self) -> int:
        if self._hashcache is None:
            object.__setattr__(self, "_hashcache", hash(self.items()))
        return self._hashcache

    def sort_key(self) -> tuple:
        return self.items()

    def render(self) -> str:
        if self.is_null:
            return "NULL"
        parts = [
            f"{v} -> {{{', '.join(cs)}}}" for v, cs in self.items()
        ]
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"Gamma({self.render()})"


NULL_GAMMA = Gamma()


# -- markings and configurations ----------------------------------------

class Marking:
    """Immutable mapping from place names to token multisets.

    The key set is exactly the owning configuration's place set; places
    holding no tokens map to the empty multiset.
    """

    __slots__ = ("_places", "_hashcache")

    def __init__(self, mapping=None):
        norm: dict[str, MSet] = {}
        if mapping is not None:
            items = mapping.items() if isinstance(mapping, dict) else mapping
            for place, mset in items:
                if not isinstance(mset, MSet):
                    mset = MSet.of(*mset)
                norm[place] = norm.get(place, EMPTY_MSET).add(mset)
        object.__setattr__(self, "_places", dict(sorted(norm.items())))
        object.__setattr__(self, "_hashcache", None)

    def __setattr__(self, name, value):
        raise AttributeError("Marking is immutable")

    def __getitem__(self, place: str) -> MSet:
        return self._places[place]

    def get(self, place: str, default=EMPTY_MSET) -> MSet:
        return self._places.get(place, default)

    def __contains__(self, place: str) -> bool:
        return place in self._places

    def places(self) -> tuple:
        return tuple(self._places.keys())

    def items(self) -> tuple:
        return tuple(self._places.items())

    def nonempty_items(self) -> tuple:
        return tuple((p, ms) for p, ms in self._places.items() if ms)

    @property
    def has_omega(self) -> bool:
        return any(ms.has_omega for ms in self._places.values())

    def updated(self, changes: dict) -> "Marking":
        merged = dict(self._places)
        merged.update(changes)
        return Marking(merged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Marking):
            return NotImplemented
        return self._places == other._places

    def __hash__(self) -> int:
        if self._hashcache is None:
            object.__setattr__(
                self, "_hashcache", hash(tuple(self._places.items()))
            )
        return self._hashcache

    def sort_key(self) -> tuple:
        return tuple((p, ms.sort_key()) for p, ms in self._places.items())

    def render(self) -> str:
        parts = [f"{p}{ms.render()}" for p, ms in self.nonempty_items()]
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"Marking{self.render()}"


@dataclass(frozen=True)
class Configuration:
    """A full state: marking, current place set, current gamma."""

    marking: Marking
    places: frozenset
    gamma: Gamma

    def __post_init__(self):
        if set(self.marking.places()) != set(self.places):
            raise ValueError("marking keys must equal the place set")
        object.__setattr__(self, "places", frozenset(self.places))

    def sort_key(self) -> tuple:
        return (
            self.marking.sort_key(),
            tuple(sorted(self.places)),
            self.gamma.sort_key(),
        )

    def render(self) -> str:
        return f"M={self.marking.render()} gamma={self.gamma.render()}"


def binding_key(binding: dict) -> tuple:
    """Canonical sort key of a binding: sorted (variable, constant) pairs."""
    return tuple(sorted(binding.items()))


def render_binding(binding: dict) -> str:
    """Human text such as ``[I=I_AB; D=f1]`` (keys sorted); ``[]`` if empty."""
    inner = "; ".join(f"{v}={c}" for v, c in sorted(binding.items()))
    return f"[{inner}]"


def render_step(transition: str, binding: dict) -> str:
    """Human text of a step such as ``t2 [I=I_AB]`` or bare ``t5``."""
    if not binding:
        return transition
    return f"{transition} {render_binding(binding)}"


# -- the net ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class VPNet:
    """A variable Petri net.

    Fields mirror the defining tuple: the name universe ``sigma``
    (constants with arities, and variables), the initial place set, the
    transitions, the arc set with its weights, guards, link clauses
    (``rho``), the initial constraint function ``gamma0`` and the initial
    marking ``m0``.  Instances are treated as immutable values; helper
    views are precomputed at construction.
    """

    name: str
    sigma: frozenset
    places: frozenset
    transitions: frozenset
    arcs: frozenset
    weights: dict
    guards: dict = field(default_factory=dict)
    rho: dict = field(default_factory=dict)
    gamma0: Gamma = NULL_GAMMA
    m0: Marking = Marking()

    def __post_init__(self):
        sigma = set(self.sigma)
        if not any(n.text == EPSILON for n in sigma):
            sigma.add(Name(EPSILON, KIND_CONSTANT, 1))
        object.__setattr__(self, "sigma", frozenset(sigma))
        constants = {}
        variables = set()
        for nm in sorted(self.sigma, key=lambda n: (n.kind, n.text)):
            if nm.kind == KIND_CONSTANT:
                constants[nm.text] = nm.arity
            else:
                variables.add(nm.text)
        constants.setdefault(EPSILON, 1)
        object.__setattr__(self, "constants", dict(sorted(constants.items())))
        object.__setattr__(self, "variables", frozenset(variables))
        object.__setattr__(self, "places", frozenset(self.places))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        ins: dict[str, list] = {t: [] for t in self.transitions}
        outs: dict[str, list] = {t: [] for t in self.transitions}
        for src, dst in sorted(self.arcs):
            if dst in self.transitions:
                ins[dst].append((src, self.weights.get((src, dst), EMPTY_EXPR)))
            elif src in self.transitions:
                outs[src].append((dst, self.weights.get((src, dst), EMPTY_EXPR)))
        object.__setattr__(self, "_inputs", {t: tuple(v) for t, v in ins.items()})
        object.__setattr__(self, "_outputs", {t: tuple(v) for t, v in outs.items()})

    # -- views --
    def transition_order(self) -> tuple:
        return tuple(sorted(self.transitions))

    def is_variable(self, name: str) -> bool:
        return name in self.variables

    def is_constant(self, name: str) -> bool:
        return name in self.constants

    def arity(self, constant: str) -> int:
        return self.constants[constant]

    def guard(self, transition: str) -> Guard:
        return self.guards.get(transition, TRUE)

    def link_clauses(self, transition: str) -> tuple:
        return tuple(self.rho.get(transition, ()))

    def input_arcs(self, transition: str) -> tuple:
        """Sorted (source, weight) pairs; sources are places or variables."""
        return self._inputs[transition]

    def output_arcs(self, transition: str) -> tuple:
        """Sorted (target, weight) pairs; targets are places or variables."""
        return self._outputs[transition]

    def virtual_pre(self, transition: str) -> tuple:
        return tuple(
            (src, w) for src, w in self._inputs[transition] if src in self.variables
        )

    def virtual_post(self, transition: str) -> tuple:
        return tuple(
            (dst, w) for dst, w in self._outputs[transition] if dst in self.variables
        )

    def input_side_variables(self, transition: str) -> frozenset:
        """Variables bound by the input side: names of virtual pre-places
        plus variables occurring in input arc expressions."""
        scope = set()
        for src, weight in self._inputs[transition]:
            if src in self.variables:
                scope.add(src)
            for name in weight.names():
                if name in self.variables:
                    scope.add(name)
        return frozenset(scope)

    def initial_configuration(self) -> Configuration:
        marking = {p: self.m0.get(p) for p in self.places}
        return Configuration(Marking(marking), self.places, self.gamma0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VPNet):
            return NotImplemented
        return (
            self.name == other.name
            and self.sigma == other.sigma
            and self.places == other.places
            and self.transitions == other.transitions
            and self.arcs == other.arcs
            and dict(self.weights) == dict(other.weights)
            and {t: g for t, g in self.guards.items() if g != TRUE}
            == {t: g for t, g in other.guards.items() if g != TRUE}
            and {t: tuple(c) for t, c in self.rho.items() if c}
            == {t: tuple(c) for t, c in other.rho.items() if c}
            and self.gamma0 == other.gamma0
            and self.m0 == other.m0
        )

    __hash__ = None


# -- validation ----------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    """One structural problem found by validate_net."""

    code: str
    subject: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _expr_patterns(expr: ArcExpr):
    for pattern, _count in expr.terms:
        yield pattern


def validate_net(net: VPNet) -> list:
    """Check structural well-formedness; an empty list means the net is valid.

    Violations are reported in a deterministic order and cover: undeclared
    names, kind clashes, place/transition overlaps, arity mismatches,
    misplaced empty weights, output-side variables not grounded on the
    input side, guard or link-condition variables out of scope, link ops
    targeting variables without a matching virtual output arc, and
    malformed gamma0 / m0 entries.
    """
    out: list[Violation] = []

    def bad(code: str, subject, message: str):
        out.append(Violation(code, tuple(subject), message))

    constants = net.constants
    variables = net.variables

    # name universe sanity
    clash = sorted(set(constants) & variables)
    for name in clash:
        bad("kind-clash", (name,), f"{name} declared both constant and variable")
    for t in sorted(net.transitions):
        if t in constants or t in variables:
            bad("kind-clash", (t,), f"transition {t} collides with a declared name")
    for p in sorted(net.places):
        if p not in constants:
            bad("place-not-constant", (p,), f"place {p} is not a declared constant")
        if p in net.transitions:
            bad("place-is-transition", (p,), f"{p} is both a place and a transition")

    # arcs
    for src, dst in sorted(net.arcs):
        src_is_t = src in net.transitions
        dst_is_t = dst in net.transitions
        if src_is_t == dst_is_t:
            bad(
                "arc-endpoints",
                (src, dst),
                f"arc {src} -> {dst} must join a transition with a place or variable",
            )
            continue
        t = src if src_is_t else dst
        other = dst if src_is_t else src
        weight = net.weights.get((src, dst), EMPTY_EXPR)
        if other in variables:
            if weight.is_empty and not src_is_t:
                bad(
                    "empty-weight-misplaced",
                    (src, dst),
                    f"arc {src} -> {dst}: empty weight is only legal on "
                    "transition-to-variable arcs",
                )
        elif other in constants:
            if other not in net.places:
                bad(
                    "undeclared-name",
                    (other,),
                    f"arc {src} -> {dst}: {other} is not a place",
                )
            if weight.is_empty:
                bad(
                    "empty-weight-misplaced",
                    (src, dst),
                    f"arc {src} -> {dst}: empty weight is only legal on "
                    "transition-to-variable arcs",
                )
            else:
                arity = constants.get(other)
                if arity is not None:
                    for pattern in _expr_patterns(weight):
                        if len(pattern) != arity:
                            bad(
                                "arity-mismatch",
                                (src, dst),
                                f"arc {src} -> {dst}: pattern "
                                f"{render_token(pattern)} does not match "
                                f"{other}/{arity}",
                            )
        else:
            bad("undeclared-name", (other,), f"arc endpoint {other} is not declared")
        for name in weight.names():
            if name not in constants and name not in variables:
                bad(
                    "undeclared-name",
                    (name,),
                    f"arc {src} -> {dst}: {name} is not declared",
                )

    # per-transition rules
    for t in sorted(net.transitions):
        input_scope = net.input_side_variables(t)
        for dst, weight in net.output_arcs(t):
            for name in weight.names():
                if name in variables and name not in input_scope:
                    bad(
                        "unguarded-output-variable",
                        (t, name),
                        f"transition {t}: output variable {name} does not "
                        "occur on the input side",
                    )
        for v, _w in net.virtual_post(t):
            if v not in input_scope:
                bad(
                    "unguarded-output-variable",
                    (t, v),
                    f"transition {t}: virtual post-place {v} does not occur "
                    "on the input side",
                )
        for name in guard_names(net.guard(t)):
            if name in variables and name not in input_scope:
                bad(
                    "guard-scope",
                    (t, name),
                    f"transition {t}: guard variable {name} does not occur "
                    "on the input side",
                )
            elif name not in variables and name not in constants:
                bad(
                    "undeclared-name",
                    (t, name),
                    f"transition {t}: guard name {name} is not declared",
                )
        post_vars = {v for v, _w in net.virtual_post(t)}
        for clause in net.link_clauses(t):
            for name in guard_names(clause.condition):
                if name in variables and name not in input_scope:
                    bad(
                        "rho-scope",
                        (t, name),
                        f"transition {t}: link condition variable {name} "
                        "does not occur on the input side",
                    )
                elif name not in variables and name not in constants:
                    bad(
                        "undeclared-name",
                        (t, name),
                        f"transition {t}: link condition name {name} is not declared",
                    )
            for var, _direction in clause.ops:
                if var not in variables:
                    bad(
                        "rho-target",
                        (t, var),
                        f"transition {t}: link target {var} is not a variable",
                    )
                elif var not in post_vars:
                    bad(
                        "rho-target",
                        (t, var),
                        f"transition {t}: link target {var} has no "
                        f"{t} -> {var} arc",
                    )

    # gamma0
    for var, consts in net.gamma0.items():
        if var not in variables:
            bad("gamma-domain", (var,), f"gamma key {var} is not a declared variable")
        for c in consts:
            if c not in constants:
                bad(
                    "gamma-domain",
                    (var, c),
                    f"gamma({var}) member {c} is not a declared constant",
                )

    # initial marking
    for place, mset in net.m0.items():
        if place not in net.places:
            bad("marking-domain", (place,), f"marked name {place} is not a place")
            continue
        arity = constants.get(place)
        for token, _n in mset.items():
            if arity is not None and len(token) != arity:
                bad(
                    "arity-mismatch",
                    (place,) + token,
                    f"token {render_token(token)} does not match {place}/{arity}",
                )
            for part in token:
                if part not in constants:
                    bad(
                        "marking-domain",
                        (place, part),
                        f"token component {part} is not a declared constant",
                    )
    return out
