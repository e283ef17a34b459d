"""Command-line interface.

Subcommands: ``validate``, ``enabled``, ``fire --seq``, ``ct``, ``cg``,
``analyze``, ``step`` (interactive text stepper) and ``serve`` (REST
session service).  Machine-readable output goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 2 parse or validation failure, 3 budget
exceeded, 4 step not enabled.  Setting ``VPN_COLOR=0`` disables the
little ANSI styling used in human-facing output.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .dsl import ParseError, parse
from .export import (
    config_to_json,
    dumps,
    event_to_json,
    export_dot,
    graph_to_json,
    steps_to_json,
    tree_to_json,
)
from .model import IDENT_RE, render_step
from .report import assemble_report
from .semantics import (
    NotEnabledError,
    StepSequenceError,
    UnknownTransitionError,
    enabled_set,
    fire,
    replay,
)
from .statespace import BudgetExceededError, DEFAULT_NODE_BUDGET, build_ct, ct_to_cg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_NOT_ENABLED = 4


@dataclass
class StepSpecError(Exception):
    """A step specification failed to parse; ``offset`` is 0-based."""

    offset: int
    message: str

    def __post_init__(self):
        super().__init__(str(self))

    def __str__(self) -> str:
        return f"step spec error at offset {self.offset}: {self.message}"


def parse_step_arg(text: str) -> list:
    """Parse ``t[var=const;...](;t[...])*`` into (transition, binding) pairs.

    The empty string is the empty sequence; a bare transition name means
    the empty binding.  Errors carry the 0-based character offset.
    """
    steps = []
    pos = 0
    n = len(text)

    def clamp(p: int) -> int:
        return min(p, n - 1) if n else 0

    def skip_ws(p: int) -> int:
        while p < n and text[p] in " \t":
            p += 1
        return p

    def ident(p: int, what: str):
        p = skip_ws(p)
        start = p
        while p < n and (text[p].isalnum() or text[p] == "_"):
            p += 1
        word = text[start:p]
        if not IDENT_RE.match(word):
            raise StepSpecError(clamp(start), f"expected {what}")
        return word, p

    if not text.strip():
        return []
    while True:
        name, pos = ident(pos, "a transition name")
        binding: dict = {}
        pos = skip_ws(pos)
        if pos < n and text[pos] == "[":
            pos += 1
            pos = skip_ws(pos)
            if pos < n and text[pos] == "]":
                pos += 1
            else:
                while True:
                    var, pos = ident(pos, "a variable name")
                    pos = skip_ws(pos)
                    if pos >= n or text[pos] != "=":
                        raise StepSpecError(clamp(pos), "expected '='")
                    pos += 1
                    const, pos = ident(pos, "a constant name")
                    if var in binding:
                        raise StepSpecError(clamp(pos - 1), f"duplicate binding for {var}")
                    binding[var] = const
                    pos = skip_ws(pos)
                    if pos < n and text[pos] == ";":
                        pos += 1
                        continue
                    if pos < n and text[pos] == "]":
                        pos += 1
                        break
                    raise StepSpecError(clamp(pos), "expected ';' or ']'")
        steps.append((name, binding))
        pos = skip_ws(pos)
        if pos >= n:
            return steps
        if text[pos] != ";":
            raise StepSpecError(clamp(pos), "expected ';' between steps")
        pos += 1


def _styled() -> bool:
    if os.environ.get("VPN_COLOR", "") == "0":
        return False
    return sys.stdout.isatty()


def _bold(text: str) -> str:
    return f"\x1b[1m{text}\x1b[0m" if _styled() else text


def _load(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            source = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)
    try:
        return parse(source)
    except ParseError as exc:
        for diag in exc.diagnostics:
            print(
                f"{path}:{diag.span.line}:{diag.span.column}: {diag.message}",
                file=sys.stderr,
            )
        raise SystemExit(EXIT_INPUT)


def cmd_validate(args) -> int:
    doc = _load(args.file)
    net = doc.net
    print(
        f"ok: {net.name} "
        f"({len(net.places)} places, {len(net.transitions)} transitions, "
        f"{len(net.arcs)} arcs, {len(net.variables)} variables)"
    )
    return EXIT_OK


def cmd_enabled(args) -> int:
    net = _load(args.file).net
    steps = enabled_set(net, net.initial_configuration())
    if args.json:
        sys.stdout.write(dumps(steps_to_json(steps)))
        return EXIT_OK
    for transition, binding in steps:
        print(render_step(transition, binding))
    return EXIT_OK


def cmd_fire(args) -> int:
    net = _load(args.file).net
    try:
        steps = parse_step_arg(args.seq)
    except StepSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    start = net.initial_configuration()
    try:
        trajectory = replay(net, steps, start)
    except StepSequenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ENABLED
    if args.json:
        payload = {
            "initial": config_to_json(start),
            "steps": [
                {
                    "transition": event.transition,
                    "binding": dict(event.binding),
                    "event": event_to_json(event),
                    "config": config_to_json(config),
                }
                for config, event in trajectory
            ],
            "final": config_to_json(trajectory[-1][0] if trajectory else start),
        }
        sys.stdout.write(dumps(payload))
        return EXIT_OK
    print(f"0: {start.render()}")
    for i, (config, event) in enumerate(trajectory, 1):
        step = render_step(event.transition, dict(event.binding))
        print(f"{i}: {step} -> {config.render()}")
    return EXIT_OK


def _build_tree_or_exit(net, budget: int):
    try:
        return build_ct(net, node_budget=budget)
    except BudgetExceededError as exc:
        partial = exc.partial
        stats = partial.stats() if partial is not None else {}
        print(f"error: {exc} (partial: {stats})", file=sys.stderr)
        raise SystemExit(EXIT_BUDGET)


def cmd_ct(args) -> int:
    net = _load(args.file).net
    tree = _build_tree_or_exit(net, args.max_nodes)
    if args.format == "dot":
        sys.stdout.write(export_dot(tree))
    else:
        sys.stdout.write(dumps(tree_to_json(tree)))
    return EXIT_OK


def cmd_cg(args) -> int:
    net = _load(args.file).net
    tree = _build_tree_or_exit(net, args.max_nodes)
    graph = ct_to_cg(tree)
    if args.format == "dot":
        sys.stdout.write(export_dot(graph))
    else:
        sys.stdout.write(dumps(graph_to_json(graph)))
    return EXIT_OK


def cmd_analyze(args) -> int:
    net = _load(args.file).net
    try:
        report = assemble_report(net, node_budget=args.max_nodes)
    except BudgetExceededError as exc:
        partial = exc.partial
        stats = partial.stats() if partial is not None else {}
        print(f"error: {exc} (partial: {stats})", file=sys.stderr)
        return EXIT_BUDGET
    if args.json:
        sys.stdout.write(dumps(report.to_json()))
        return EXIT_OK
    for line in report.render_lines():
        if not line.startswith(" ") and ":" in line:
            head, _, rest = line.partition(":")
            print(f"{_bold(head)}:{rest}")
        else:
            print(line)
    return EXIT_OK


def cmd_step(args) -> int:
    net = _load(args.file).net
    history = [net.initial_configuration()]
    out = sys.stdout
    print(f"stepping {net.name}; number fires, u undoes, g shows gamma, q quits", file=out)
    while True:
        config = history[-1]
        steps = enabled_set(net, config)
        print(f"\nstate {len(history) - 1}: {config.render()}", file=out)
        if steps:
            for i, (transition, binding) in enumerate(steps, 1):
                print(f"  {i}) {render_step(transition, binding)}", file=out)
        else:
            print("  (no enabled steps - terminal)", file=out)
        print("> ", end="", file=out, flush=True)
        line = sys.stdin.readline()
        if not line:
            print("", file=out)
            return EXIT_OK
        choice = line.strip()
        if choice == "" :
            continue
        if choice == "q":
            return EXIT_OK
        if choice == "u":
            if len(history) > 1:
                history.pop()
            else:
                print("already at the initial configuration", file=out)
            continue
        if choice == "g":
            print(f"gamma: {config.gamma.render()}", file=out)
            continue
        if not choice.isdigit() or not (1 <= int(choice) <= len(steps)):
            print(f"unrecognized choice {choice!r}", file=out)
            continue
        transition, binding = steps[int(choice) - 1]
        next_config, event = fire(net, config, transition, binding)
        history.append(next_config)
        print(f"fired {render_step(transition, binding)}", file=out)
        if event.new_places:
            print(f"  created places: {', '.join(event.new_places)}", file=out)
        for var, const, direction in event.gamma_ops:
            verb = "linked" if direction == "+" else "unlinked"
            print(f"  {verb} {var} {'->' if direction == '+' else '-/->'} {const}", file=out)
        if event.solid_arcs:
            arcs = ", ".join(f"{a} -> {b}" for a, b in sorted(event.solid_arcs))
            print(f"  solid arcs: {arcs}", file=out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    ui_dir = args.ui_dir
    if ui_dir is None:
        candidate = os.path.join(os.getcwd(), "frontend", "dist")
        ui_dir = candidate if os.path.isdir(candidate) else None
    app = create_app(ui_dir=ui_dir, cors_origins=args.cors_origin or ["*"])
    uvicorn.run(app, host=args.bind, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpn",
        description="Validate, execute and analyze variable Petri nets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a net file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enabled", help="list enabled steps at the initial configuration")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enabled)

    p = sub.add_parser("fire", help="fire a step sequence from the initial configuration")
    p.add_argument("file")
    p.add_argument("--seq", required=True, help="t[var=const;...](;t[...])*")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fire)

    p = sub.add_parser("ct", help="build and export the coverability tree")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_ct)

    p = sub.add_parser("cg", help="build and export the coverability graph")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("analyze", help="run all analyses and print the report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("step", help="interactive text-mode stepper")
    p.add_argument("file")
    p.set_defaults(func=cmd_step)

    p = sub.add_parser("serve", help="run the REST session service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None, help="directory of built UI assets")
    p.add_argument("--cors-origin", action="append", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotEnabledError, UnknownTransitionError, StepSequenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ENABLED


if __name__ == "__main__":
    sys.exit(main())
