"""Batch command-line front end.

One subcommand per capability, no interactivity.  Exit codes are part
of the interface: 0 for success or a valid/proved input, 1 for an
invalid or refuted input (with a witness printed), 2 for usage and
parse problems, 3 for a configured resource limit.  With --machine the
output becomes line-delimited key=value records with stable names, one
field per line.  Arguments may be read from a file with @file, one
argument per line.  Caps come from the LOGIC1939_CAPS environment
variable.
"""

import argparse
import sys
from pathlib import Path

import itertools

from . import hilbert, matrices, pred_kernel, preds, props, relations, semantics, sequents
from .completeness import synthesize
from .config import Config
from .errors import (
    EmptyDisjunction,
    LogicError,
    NotATautology,
    ProofError,
    ResourceLimit,
    ScriptError,
)
from .syllogistic import (
    MOOD_CATALOGUE,
    Mood,
    class_valid,
    classify_moods,
    decide_monadic,
    mood_class_formula,
    mood_pred_formula,
    mood_verdict,
    moods_report,
    parse_class,
    print_class,
)


class Output:
    """Prints either human text or machine records, never both."""

    def __init__(self, machine: bool):
        self.machine = machine

    def emit(self, key, value):
        print(f"{key}={value}" if self.machine else f"{key}: {value}")

    def text(self, line=""):
        if not self.machine:
            print(line)

    def record(self, key, value):
        if self.machine:
            print(f"{key}={value}")


def _fail(message) -> None:
    print(message, file=sys.stderr)


def _fmt_bool(b) -> str:
    return "true" if b else "false"


def _fmt_assignment(env, order=None) -> str:
    names = order if order is not None else sorted(env)
    return " ".join(f"{n}={'T' if env[n] else 'F'}" for n in names)


def _fmt_class_env(env) -> str:
    if not env:
        return "empty environment"
    size = next(iter(env.values())).size
    parts = [f"universe {size}"]
    for name in sorted(env):
        members = ", ".join(str(m) for m in env[name].members)
        parts.append(f"{name} = {{{members}}}")
    return "; ".join(parts)


def _fmt_model(model, env) -> str:
    parts = [f"universe {model.size}"]
    for name, extension in model.relations:
        inside = ", ".join(str(t[0]) if len(t) == 1 else str(t) for t in sorted(extension))
        parts.append(f"{name} = {{{inside}}}")
    for name, value in model.props:
        parts.append(f"{name} = {'T' if value else 'F'}")
    for name in sorted(env):
        parts.append(f"{name} = {env[name]}")
    return "; ".join(parts)


# ---------------------------------------------------------------------------
# Propositional commands


def cmd_parse(args, cfg, out):
    f = props.parse_polish(args.formula) if args.polish else props.parse_infix(args.formula)
    mode = "full" if args.full_parens else "minimal"
    out.emit("infix", props.print_infix(f, mode=mode))
    out.emit("polish", props.print_polish(f))
    return 0


def cmd_table(args, cfg, out):
    f = props.parse_infix(args.formula)
    t = semantics.truth_table(f, var_cap=cfg.var_cap)
    if out.machine:
        out.record("vars", " ".join(t.variables))
        for combo, value in zip(itertools.product("TF", repeat=len(t.variables)), t.rows):
            out.record("row", "".join(combo) + ":" + ("T" if value else "F"))
    else:
        out.text(semantics.serialize_table(t))
    return 0


def cmd_decide(args, cfg, out):
    f = props.parse_infix(args.formula)
    ok, counterexample = semantics.is_tautology(f, var_cap=cfg.var_cap)
    if ok:
        out.text("tautology")
        out.record("verdict", "tautology")
        return 0
    witness = _fmt_assignment(counterexample, props.variables(f))
    out.text(f"counterexample: {witness}")
    out.record("verdict", "falsifiable")
    out.record("witness", witness)
    return 1


def _cmd_normal_form(args, cfg, out, transform, key):
    f = props.parse_infix(args.formula)
    g = transform(f, node_cap=cfg.node_cap)
    out.text(props.print_infix(g))
    out.record(key, props.print_infix(g))
    return 0


def cmd_dnf(args, cfg, out):
    return _cmd_normal_form(args, cfg, out, semantics.to_dnf, "dnf")


def cmd_cnf(args, cfg, out):
    return _cmd_normal_form(args, cfg, out, semantics.to_cnf, "cnf")


def cmd_closure(args, cfg, out):
    basis = [b.strip() for b in args.basis.split(",") if b.strip()]
    functions = semantics.definability_closure(basis, args.arity)
    out.emit("count", len(functions))
    for g in sorted(functions):
        bits = "".join("T" if b else "F" for b in g)
        parity = "even" if semantics.is_even_function(g) else "odd"
        out.emit("function", f"{bits} {parity}")
    return 0


def cmd_check(args, cfg, out):
    proof = hilbert.parse_proof_script(Path(args.file).read_text())
    conclusion = hilbert.check_proof(proof)
    out.emit("steps", len(proof))
    out.emit("conclusion", props.print_infix(conclusion))
    return 0


def cmd_prove(args, cfg, out):
    f = props.parse_infix(args.formula)
    proof = synthesize(f)
    hilbert.check_proof(proof)
    if args.script:
        out.text(hilbert.serialize_proof(proof))
    out.emit("steps", len(proof))
    out.emit("conclusion", props.print_infix(proof.conclusion))
    return 0


def cmd_crank(args, cfg, out):
    run = hilbert.enumerate_theorems(args.depth, budget=args.budget)
    for f, _ in run.theorems:
        line = props.print_infix(f)
        out.text(line)
        out.record("theorem", line)
    out.record("count", len(run))
    out.record("exhausted", _fmt_bool(run.budget_exhausted))
    if run.budget_exhausted and not out.machine:
        print(f"budget of {args.budget} exhausted", file=sys.stderr)
    return 0


def cmd_independence(args, cfg, out):
    if args.matrix == "bernays":
        matrix = matrices.BERNAYS
    else:
        matrix = matrices.parse_matrix(Path(args.matrix).read_text())
    report = matrices.independence_report(matrix, args.axiom)
    out.emit("established", _fmt_bool(report.established))
    out.emit("kept", " ".join(report.kept_tautologies))
    if report.kept_failures:
        out.emit("kept_failures", " ".join(report.kept_failures))
    out.emit("mp_sound", _fmt_bool(report.mp_ok))
    if report.witness is not None:
        pretty = " ".join(f"{k}={v}" for k, v in sorted(report.witness.items()))
        out.emit("witness", pretty)
        out.emit("witness_value", report.witness_value)
    return 0 if report.established else 1


def cmd_seqcheck(args, cfg, out):
    proof = sequents.parse_sequent_script(Path(args.file).read_text())
    conclusion = sequents.check_sequent_proof(proof)
    out.emit("steps", len(proof.steps))
    out.emit("conclusion", sequents.serialize_sequent(conclusion))
    return 0


# ---------------------------------------------------------------------------
# Predicate commands


def cmd_pparse(args, cfg, out):
    f = preds.parse_pred(args.formula)
    out.emit("formula", preds.print_pred(f))
    report = preds.scope_report(f)
    out.emit("free", " ".join(sorted(report.free)) or "-")
    out.emit("bound", " ".join(sorted(report.bound)) or "-")
    arities = preds.functional_arities(f)
    out.emit("functions", " ".join(f"{n}/{arities[n]}" for n in sorted(arities)) or "-")
    for q in report.quantifiers:
        out.emit("quantifier", f"{q.kind} {q.var} at {q.path}")
    return 0


def cmd_pcheck(args, cfg, out):
    proof = pred_kernel.parse_pred_proof_script(Path(args.file).read_text())
    try:
        conclusion = pred_kernel.check_pred_proof(proof)
    except LogicError as exc:
        _fail(str(exc))
        out.record("verdict", "rejected")
        return 1
    out.emit("steps", len(proof.steps))
    out.emit("conclusion", preds.print_pred(conclusion))
    return 0


def cmd_monadic(args, cfg, out):
    f = preds.parse_pred(args.formula)
    report = decide_monadic(f, max_size=args.sizes, config=cfg)
    out.emit("bound", report.bound)
    for size, ok in report.per_size:
        out.emit(f"size_{size}", "valid" if ok else "refuted")
    if report.valid:
        out.emit("verdict", "valid")
        return 0
    out.emit("verdict", "refuted")
    model, env = report.witness
    out.emit("witness", _fmt_model(model, env))
    return 1


# ---------------------------------------------------------------------------
# Class calculus commands


def cmd_mood(args, cfg, out):
    mood = Mood(args.figure, args.vowels)
    verdict = mood_verdict(mood, cfg)
    out.emit("class", print_class(mood_class_formula(mood)))
    out.emit("pred", preds.print_pred(mood_pred_formula(mood)))
    out.emit("kind", verdict.kind)
    if verdict.imports:
        out.emit("imports", " ".join(verdict.imports))
    if verdict.kind == "invalid":
        out.emit("witness", _fmt_class_env(verdict.countermodel))
        return 1
    return 0


def cmd_moods(args, cfg, out):
    if out.machine:
        verdicts = {(m.figure, m.vowels): v for m, v in classify_moods(cfg).items()}
        for fig, vowels, name in MOOD_CATALOGUE:
            v = verdicts[(fig, vowels)]
            tail = v.kind if not v.imports else v.kind + "," + " ".join(v.imports)
            out.record("mood", f"{fig},{vowels},{name},{tail}")
        counts = {"valid": 0, "import": 0, "invalid": 0}
        for v in verdicts.values():
            counts[v.kind] += 1
        out.record("counts", f"{counts['valid']},{counts['import']},{counts['invalid']}")
    else:
        out.text(moods_report(cfg).rstrip("\n"))
    return 0


def cmd_classvalid(args, cfg, out):
    f = parse_class(args.formula)
    ok, env = class_valid(f, max_universe=args.max_universe, config=cfg)
    if ok:
        out.text("valid")
        out.record("verdict", "valid")
        return 0
    out.emit("witness", _fmt_class_env(env))
    out.record("verdict", "refuted")
    return 1


# ---------------------------------------------------------------------------
# Relations


def _load_relation(path):
    return relations.parse_relation(Path(path).read_text())


def cmd_rel(args, cfg, out):
    op = args.op
    operands = args.operands
    if op == "classify":
        if len(operands) != 1:
            raise ScriptError(0, "rel classify takes one file")
        profile = relations.classify(_load_relation(operands[0]))
        for name in ("symmetric", "transitive", "intransitive", "one_many", "many_one", "one_one"):
            out.emit(name, _fmt_bool(getattr(profile, name)))
        return 0
    if op == "identity":
        if len(operands) != 1:
            raise ScriptError(0, "rel identity takes a universe size")
        result = relations.identity(int(operands[0]))
    elif op == "power":
        if len(operands) != 2:
            raise ScriptError(0, "rel power takes a file and an exponent")
        result = relations.rel_power(_load_relation(operands[0]), int(operands[1]))
    else:
        rels = [_load_relation(p) for p in operands]
        result = relations.rel_op(op, *rels)
    if isinstance(result, bool):
        out.text("yes" if result else "no")
        out.record(op, _fmt_bool(result))
        return 0 if result else 1
    if out.machine:
        out.record("universe", result.size)
        for x, y in result.pairs:
            out.record("pair", f"{x} {y}")
    else:
        out.text(relations.serialize_relation(result).rstrip("\n"))
    return 0


# ---------------------------------------------------------------------------
# Corpus runner


def _corpus_glob(base, sub, pattern):
    d = base / sub
    return sorted(d.glob(pattern)) if d.is_dir() else []


def cmd_corpus(args, cfg, out):
    base = Path(args.path)
    if not base.is_dir():
        _fail(f"{base}: not a directory")
        return 2
    items = 0

    def ok(path):
        nonlocal items
        items += 1
        out.record("checked", str(path))

    def fail(location, message):
        _fail(f"{location}: {message}")
        out.record("failed", str(location))
        return 1

    for path in _corpus_glob(base, "prop", "*.proof"):
        try:
            hilbert.check_proof(hilbert.parse_proof_script(path.read_text()))
        except LogicError as exc:
            return fail(path, exc)
        ok(path)
    for path in _corpus_glob(base, "pred", "*.pproof"):
        try:
            pred_kernel.check_pred_proof(pred_kernel.parse_pred_proof_script(path.read_text()))
        except LogicError as exc:
            return fail(path, exc)
        ok(path)
    for path in _corpus_glob(base, "seq", "*.sproof"):
        try:
            sequents.check_sequent_proof(sequents.parse_sequent_script(path.read_text()))
        except LogicError as exc:
            return fail(path, exc)
        ok(path)
    tautologies = base / "tautologies.txt"
    if tautologies.is_file():
        for no, raw in enumerate(tautologies.read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                f = props.parse_infix(line)
                ok_taut, _ = semantics.is_tautology(f, var_cap=cfg.var_cap)
                if not ok_taut:
                    return fail(f"{tautologies}:{no}", "not a tautology")
            except LogicError as exc:
                return fail(f"{tautologies}:{no}", exc)
        ok(tautologies)
    for path in _corpus_glob(base, "matrices", "*.mat"):
        try:
            matrix = matrices.parse_matrix(path.read_text())
        except ValueError as exc:
            return fail(path, exc)
        if path.name == "bernays.mat":
            report = matrices.independence_report(matrix, "A2")
            if not report.established:
                return fail(path, "independence of A2 not established")
        ok(path)
    expected = base / "moods.expected"
    if expected.is_file():
        want = expected.read_text().splitlines()
        got = moods_report(cfg).splitlines()
        for no, (w, g) in enumerate(zip(want, got), start=1):
            if w != g:
                return fail(f"{expected}:{no}", f"expected {g!r}, file says {w!r}")
        if len(want) != len(got):
            return fail(expected, f"{len(want)} lines, expected {len(got)}")
        ok(expected)
    out.text(f"corpus ok: {items} items")
    out.record("items", items)
    return 0


# ---------------------------------------------------------------------------
# Wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logic1939",
        description="Decision procedures and proof checkers for a 1939 logic course.",
        fromfile_prefix_chars="@",
    )
    parser.add_argument("--machine", action="store_true", help="line-delimited key=value output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a propositional formula, print both notations")
    p.add_argument("formula")
    p.add_argument("--polish", action="store_true", help="input is in Polish notation")
    p.add_argument("--full-parens", action="store_true")
    p.set_defaults(handler=cmd_parse)

    p = sub.add_parser("table", help="print the full truth table")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("decide", help="tautology test with counterexample")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("dnf", help="disjunctive normal form")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_dnf)

    p = sub.add_parser("cnf", help="conjunctive normal form")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_cnf)

    p = sub.add_parser("closure", help="definability closure of a connective basis")
    p.add_argument("basis", help="comma-separated, e.g. ~,<-> or sheffer")
    p.add_argument("--arity", type=int, default=2)
    p.set_defaults(handler=cmd_closure)

    p = sub.add_parser("check", help="check a propositional proof script")
    p.add_argument("file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("prove", help="synthesize a kernel proof of a tautology")
    p.add_argument("formula")
    p.add_argument("--script", action="store_true", help="print the whole proof")
    p.set_defaults(handler=cmd_prove)

    p = sub.add_parser("crank", help="enumerate theorems breadth-first")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(handler=cmd_crank)

    p = sub.add_parser("independence", help="matrix independence certificate")
    p.add_argument("--axiom", default="A2")
    p.add_argument("--matrix", default="bernays", help="bernays or a matrix file")
    p.set_defaults(handler=cmd_independence)

    p = sub.add_parser("seqcheck", help="check a sequent proof script")
    p.add_argument("file")
    p.set_defaults(handler=cmd_seqcheck)

    p = sub.add_parser("pparse", help="parse a predicate formula, report scopes")
    p.add_argument("formula")
    p.set_defaults(handler=cmd_pparse)

    p = sub.add_parser("pcheck", help="check a predicate proof script")
    p.add_argument("file")
    p.set_defaults(handler=cmd_pcheck)

    p = sub.add_parser("mood", help="classify one syllogistic mood")
    p.add_argument("figure", help="I, II, III or IV")
    p.add_argument("vowels", help="three letters from a, e, i, o")
    p.set_defaults(handler=cmd_mood)

    p = sub.add_parser("moods", help="the classical catalogue with verdicts and counts")
    p.set_defaults(handler=cmd_moods)

    p = sub.add_parser("monadic", help="decide a monadic predicate formula")
    p.add_argument("formula")
    p.add_argument("--sizes", type=int, default=None, help="check universes up to this size")
    p.set_defaults(handler=cmd_monadic)

    p = sub.add_parser("classvalid", help="decide a class-calculus formula")
    p.add_argument("formula")
    p.add_argument("--max-universe", type=int, default=8)
    p.set_defaults(handler=cmd_classvalid)

    p = sub.add_parser("rel", help="finite relation algebra")
    p.add_argument("op", help="plus times minus diff inverse relprod power identity subrel classify")
    p.add_argument("operands", nargs="*")
    p.set_defaults(handler=cmd_rel)

    p = sub.add_parser("corpus", help="run every file in a corpus directory")
    p.add_argument("path")
    p.set_defaults(handler=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        cfg = Config.from_env()
    except ValueError as exc:
        _fail(str(exc))
        return 2
    out = Output(args.machine)
    try:
        return args.handler(args, cfg, out)
    except ResourceLimit as exc:
        _fail(str(exc))
        return 3
    except (ProofError, NotATautology, EmptyDisjunction) as exc:
        _fail(str(exc))
        return 1
    except (LogicError, ValueError) as exc:
        _fail(str(exc))
        return 2
    except OSError as exc:
        _fail(str(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
