"""Execution semantics: bindings, enabledness and firing.

A binding assigns constants to the variables a transition mentions.  A
transition is enabled under a binding when its guard holds, every virtual
pre-place resolves (via the current gamma) to an existing place, and the
aggregated demand of all input arcs — real and resolved virtual arcs may
land on the same physical place — is covered by the marking.

Firing applies, in order: creation of places for virtual post-places whose
instantiation does not exist yet (born empty), the transition's link
clauses rewriting gamma, and the marking balance.  The instantiated
virtual arcs of the step are reported on the firing event (``solidArcs``)
for animation and tracing; they are never added to the net's arc set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    And,
    BoolLit,
    Cmp,
    Configuration,
    EMPTY_MSET,
    Gamma,
    Guard,
    Marking,
    MSet,
    Not,
    Or,
    UnboundVariableError,
    VPNet,
    binding_key,
    render_binding,
)

#: A binding is a plain mapping from variable names to constant names.
Binding = dict


class NotEnabledError(Exception):
    """A requested step (transition, binding) is not enabled."""

    def __init__(self, transition: str, binding: Binding, reason: str = ""):
        self.transition = transition
        self.binding = dict(binding)
        self.reason = reason
        text = f"step {transition} {render_binding(binding)} is not enabled"
        if reason:
            text += f": {reason}"
        super().__init__(text)


class UnknownTransitionError(KeyError):
    def __init__(self, transition: str):
        super().__init__(transition)
        self.transition = transition

    def __str__(self) -> str:
        return f"unknown transition {self.transition}"


@dataclass
class StepSequenceError(Exception):
    """A step in a firing sequence failed; ``index`` is 0-based."""

    index: int
    transition: str
    binding: Binding
    cause: Exception

    def __post_init__(self):
        super().__init__(str(self))

    def __str__(self) -> str:
        return (
            f"step {self.index} ({self.transition} "
            f"{render_binding(self.binding)}) failed: {self.cause}"
        )


@dataclass(frozen=True)
class FiringEvent:
    """What one firing did: token flow, created places, gamma rewrites.

    ``solidArcs`` holds the momentarily solid instantiations of the
    transition's virtual arcs — pairs (v[beta], t) and (t, v[beta]).
    ``gammaOps`` holds the executed link operations as
    (variable, constant, direction) triples in execution order.
    """

    transition: str
    binding: tuple  # sorted (variable, constant) pairs
    consumed: tuple  # sorted (place, MSet) pairs, empty multisets dropped
    produced: tuple  # sorted (place, MSet) pairs, empty multisets dropped
    new_places: tuple  # sorted
    gamma_ops: tuple  # (variable, constant, "+"|"-") in execution order
    solid_arcs: frozenset  # of (source, target) name pairs

    def binding_dict(self) -> Binding:
        return dict(self.binding)


def _resolve(name: str, net: VPNet, binding: Binding) -> str:
    if net.is_variable(name):
        if name not in binding:
            raise UnboundVariableError(name)
        return binding[name]
    return name


def eval_guard(net: VPNet, guard: Guard, binding: Binding) -> bool:
    """Evaluate a guard under a binding; unbound variables raise."""
    if isinstance(guard, BoolLit):
        return guard.value
    if isinstance(guard, Cmp):
        lhs = _resolve(guard.lhs, net, binding)
        rhs = _resolve(guard.rhs, net, binding)
        return (lhs == rhs) if guard.op == "==" else (lhs != rhs)
    if isinstance(guard, Not):
        return not eval_guard(net, guard.arg, binding)
    if isinstance(guard, And):
        return eval_guard(net, guard.lhs, binding) and eval_guard(net, guard.rhs, binding)
    if isinstance(guard, Or):
        return eval_guard(net, guard.lhs, binding) or eval_guard(net, guard.rhs, binding)
    raise TypeError(f"not a guard: {guard!r}")


def _unify(pattern, token, net: VPNet, binding: Binding):
    """Match one pattern against one token, extending ``binding``.

    Returns the extended binding, or None when the match fails.
    """
    if len(pattern) != len(token):
        return None
    out = binding
    for name, part in zip(pattern, token):
        if net.is_variable(name):
            bound = out.get(name)
            if bound is None:
                if out is binding:
                    out = dict(binding)
                out[name] = part
            elif bound != part:
                return None
        elif name != part:
            return None
    return out


def _input_slots(net: VPNet, transition: str):
    """Flatten the input side into matcher slots in canonical order.

    Each slot is ("bind", v) — choose the instantiation of virtual
    pre-place v from gamma — or ("match", source, pattern) where source is
    a place name or a previously bound virtual pre-place variable.
    """
    slots = []
    for src, weight in net.input_arcs(transition):
        if src in net.variables:
            slots.append(("bind", src, None))
            for pattern, _count in weight.terms:
                slots.append(("match", src, pattern))
        else:
            for pattern, _count in weight.terms:
                slots.append(("match", src, pattern))
    return slots


def enumerate_bindings(net: VPNet, config: Configuration, transition: str) -> list:
    """All bindings under which ``transition`` is enabled, in canonical order.

    Candidates are generated by pattern-matching input arc expressions
    against place contents (consistently across repeated variables) and by
    letting each virtual pre-place range over its gamma set; every
    candidate is then re-checked with :func:`is_enabled`, which enforces
    guard truth and aggregated multiset coverage.
    """
    if transition not in net.transitions:
        raise UnknownTransitionError(transition)
    slots = _input_slots(net, transition)
    marking = config.marking
    gamma = config.gamma
    results: list[Binding] = []

    def walk(i: int, binding: Binding):
        if i == len(slots):
            results.append(binding)
            return
        kind, src, pattern = slots[i]
        if kind == "bind":
            already = binding.get(src)
            candidates = (already,) if already is not None else sorted(gamma.get(src))
            for c in candidates:
                if c not in gamma.get(src) or c not in marking:
                    continue
                ext = binding if already is not None else {**binding, src: c}
                walk(i + 1, ext)
            return
        place = binding[src] if src in net.variables else src
        tokens = marking.get(place).tokens() if place in marking else ()
        seen = set()
        for token in tokens:
            ext = _unify(pattern, token, net, binding)
            if ext is None:
                continue
            key = binding_key(ext)
            if key in seen:
                continue
            seen.add(key)
            walk(i + 1, ext if ext is not binding else dict(binding))

    walk(0, {})

    unique: dict[tuple, Binding] = {}
    for b in results:
        unique.setdefault(binding_key(b), b)
    return [
        b
        for _key, b in sorted(unique.items())
        if is_enabled(net, config, transition, b)
    ]


def is_enabled(net: VPNet, config: Configuration, transition: str, binding: Binding) -> bool:
    """Decide enabledness of one step; any failed condition yields False.

    The binding must cover the transition's input side (virtual pre-place
    names and variables in input arc expressions); an incomplete binding
    raises UnboundVariableError.
    """
    if transition not in net.transitions:
        raise UnknownTransitionError(transition)
    if not eval_guard(net, net.guard(transition), binding):
        return False
    demands = _input_demands(net, transition, binding, config)
    if demands is None:
        return False
    for place, demand in demands.items():
        if not demand.leq(config.marking.get(place)):
            return False
    return True


def _input_demands(net: VPNet, transition: str, binding: Binding, config: Configuration):
    """Aggregate input-arc demand per physical place, or None if some
    virtual pre-place fails to resolve to a linked, existing place."""
    demands: dict[str, MSet] = {}
    for src, weight in net.input_arcs(transition):
        if src in net.variables:
            if src not in binding:
                raise UnboundVariableError(src)
            place = binding[src]
            if place not in config.gamma.get(src) or place not in config.marking:
                return None
        else:
            place = src
        demand = weight.substitute(binding, net.variables)
        demands[place] = demands.get(place, EMPTY_MSET).add(demand)
    return demands


def _apply_rho_traced(net: VPNet, gamma: Gamma, transition: str, binding: Binding):
    """Apply the transition's link clauses; returns (new gamma, executed ops)."""
    ops = []
    for clause in net.link_clauses(transition):
        if not eval_guard(net, clause.condition, binding):
            continue
        for var, direction in clause.ops:
            const = binding.get(var)
            if const is None:
                raise UnboundVariableError(var)
            gamma = gamma.add(var, const) if direction == "+" else gamma.remove(var, const)
            ops.append((var, const, direction))
    return gamma, tuple(ops)


def apply_rho(net: VPNet, gamma: Gamma, transition: str, binding: Binding) -> Gamma:
    """The constraint function after the transition's link clauses run.

    For each clause whose condition holds under ``binding``, a "+" op
    links the bound constant to the variable and a "-" op unlinks it;
    unlinking an absent constant is a no-op.
    """
    return _apply_rho_traced(net, gamma, transition, binding)[0]


def fire(net: VPNet, config: Configuration, transition: str, binding: Binding):
    """Fire one enabled step; returns (successor configuration, event).

    Raises NotEnabledError when the binding is incomplete, out of the
    declared universe, or the step is simply not enabled.
    """
    if transition not in net.transitions:
        raise UnknownTransitionError(transition)
    for var, const in binding.items():
        if var not in net.variables:
            raise NotEnabledError(transition, binding, f"{var} is not a variable")
        if const not in net.constants:
            raise NotEnabledError(transition, binding, f"{const} is not a constant")
    missing = sorted(net.input_side_variables(transition) - set(binding))
    if missing:
        raise NotEnabledError(
            transition, binding, f"binding leaves {', '.join(missing)} unbound"
        )
    try:
        enabled = is_enabled(net, config, transition, binding)
    except UnboundVariableError as exc:
        raise NotEnabledError(transition, binding, str(exc)) from exc
    if not enabled:
        raise NotEnabledError(transition, binding)

    # 1. create places for unseen virtual post-place instantiations
    new_places = []
    for var, _weight in net.virtual_post(transition):
        const = binding[var]
        if const not in config.places and const not in new_places:
            new_places.append(const)
    new_places.sort()
    places = config.places | set(new_places)

    # 2. rewrite gamma through the link clauses
    gamma, gamma_ops = _apply_rho_traced(net, config.gamma, transition, binding)

    # 3. marking balance over the extended place set
    marking = {p: config.marking.get(p) for p in config.marking.places()}
    for p in new_places:
        marking[p] = EMPTY_MSET
    consumed = _input_demands(net, transition, binding, config)
    for place, demand in consumed.items():
        marking[place] = marking[place].sub(demand)
    produced: dict[str, MSet] = {}
    for dst, weight in net.output_arcs(transition):
        place = binding[dst] if dst in net.variables else dst
        out = weight.substitute(binding, net.variables)
        produced[place] = produced.get(place, EMPTY_MSET).add(out)
    for place, supply in produced.items():
        marking[place] = marking[place].add(supply)

    solid = set()
    for var, _weight in net.virtual_pre(transition):
        solid.add((binding[var], transition))
    for var, _weight in net.virtual_post(transition):
        solid.add((transition, binding[var]))

    event = FiringEvent(
        transition=transition,
        binding=binding_key(binding),
        consumed=tuple((p, ms) for p, ms in sorted(consumed.items()) if ms),
        produced=tuple((p, ms) for p, ms in sorted(produced.items()) if ms),
        new_places=tuple(new_places),
        gamma_ops=gamma_ops,
        solid_arcs=frozenset(solid),
    )
    return Configuration(Marking(marking), places, gamma), event


def enabled_set(net: VPNet, config: Configuration) -> list:
    """All enabled steps as (transition, binding) pairs, canonically ordered."""
    steps = []
    for t in net.transition_order():
        for binding in enumerate_bindings(net, config, t):
            steps.append((t, binding))
    return steps


def replay(net: VPNet, steps, config: Configuration = None) -> list:
    """Fire (transition, binding) steps from ``config`` (default: initial).

    Returns the trajectory as a list of (configuration, event) pairs, one
    per step.  On failure raises StepSequenceError naming the 0-based
    index of the offending step.
    """
    out = []
    current = net.initial_configuration() if config is None else config
    for i, (transition, binding) in enumerate(steps):
        try:
            current, event = fire(net, current, transition, binding)
        except (NotEnabledError, UnknownTransitionError) as exc:
            raise StepSequenceError(i, transition, dict(binding), exc) from exc
        out.append((current, event))
    return out


def fire_sequence(net: VPNet, steps, config: Configuration = None) -> list:
    """All configurations along a firing sequence, the start included.

    Firing k steps yields k+1 configurations; an empty sequence yields
    just the start configuration.  Raises StepSequenceError on the first
    step that is not enabled, naming its 0-based index.
    """
    start = net.initial_configuration() if config is None else config
    return [start] + [cfg for cfg, _event in replay(net, steps, start)]
