"""Trusted proof kernel for the propositional calculus.

A proof is a sequence of steps, each carrying a formula and a
justification.  The kernel accepts exactly four primitive
justifications: citing an axiom, substituting formulas for all
variables of an earlier step, modus ponens, and rewriting a single
occurrence of a defined connective (implication, conjunction or
equivalence) by its definition.  Everything else in the system is
derived outside the kernel and expands into these four moves.

Axioms:

    A1  p -> p | q
    A2  p | p -> p
    A3  p | q -> q | p
    A4  (p -> q) -> (r | p -> r | q)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import PreconditionViolated, ProofError, ScriptError
from .props import (
    Bin,
    Connective,
    Implies_,
    Not,
    Or_,
    PropFormula,
    Var,
    parse_infix,
    print_infix,
    substitute,
    variables,
)
from .rewrite import (
    DEF_RULES,
    Path,
    apply_definition,
    expand_definition,
    fold_definition,
    format_path,
    parse_path,
    replace_at,
)

_p, _q, _r = Var("p"), Var("q"), Var("r")

AXIOMS: dict[str, PropFormula] = {
    "A1": Implies_(_p, Or_(_p, _q)),
    "A2": Implies_(Or_(_p, _p), _p),
    "A3": Implies_(Or_(_p, _q), Or_(_q, _p)),
    "A4": Implies_(Implies_(_p, _q), Implies_(Or_(_r, _p), Or_(_r, _q))),
}

AXIOM_IDS = ("A1", "A2", "A3", "A4")

# Connectives a proof step may mention.  The two stroke-style
# connectives have no definitional rule and are therefore outside the
# proof system, even though the semantic layer understands them.
_PROVABLE_CONNS = {Connective.OR, Connective.AND, Connective.IMPLIES, Connective.EQUIV}


@dataclass(frozen=True)
class Axiom:
    axiom_id: str


@dataclass(frozen=True)
class Subst:
    step: int
    mapping: tuple[tuple[str, PropFormula], ...]


@dataclass(frozen=True)
class MP:
    major: int
    minor: int


@dataclass(frozen=True)
class DefRewrite:
    step: int
    path: Path
    rule: str
    direction: str


Justification = Axiom | Subst | MP | DefRewrite


@dataclass(frozen=True)
class Step:
    formula: PropFormula
    just: Justification


@dataclass(frozen=True)
class Proof:
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> PropFormula:
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)


def _connectives_ok(f) -> bool:
    if isinstance(f, Var):
        return True
    if isinstance(f, Not):
        return _connectives_ok(f.sub)
    return f.conn in _PROVABLE_CONNS and _connectives_ok(f.left) and _connectives_ok(f.right)


def _ref(i: int, bound: int, step_no: int, what: str) -> None:
    if not (0 <= i < bound):
        raise ProofError(step_no, "BadReference", f"{what} cites step {i + 1}, which is not an earlier step")


def check_proof(proof: Proof) -> PropFormula:
    """Check every step of a proof; return the conclusion.

    Raises ProofError with a step number and a code on the first
    defective step.
    """
    if not proof.steps:
        raise ProofError(0, "Empty", "a proof needs at least one step")
    for i, step in enumerate(proof.steps):
        no = i + 1
        if not _connectives_ok(step.formula):
            raise ProofError(no, "BadFormula", "formula uses a connective outside the proof system")
        j = step.just
        if isinstance(j, Axiom):
            if j.axiom_id not in AXIOMS:
                raise ProofError(no, "BadAxiom", f"unknown axiom {j.axiom_id}")
            if step.formula != AXIOMS[j.axiom_id]:
                raise ProofError(no, "BadAxiom", f"formula is not axiom {j.axiom_id}")
        elif isinstance(j, Subst):
            _ref(j.step, i, no, "substitution")
            premise = proof.steps[j.step].formula
            mapping = dict(j.mapping)
            if len(mapping) != len(j.mapping):
                raise ProofError(no, "BadSubstitution", "a variable is mapped twice")
            prem_vars = set(variables(premise))
            if set(mapping) != prem_vars:
                raise ProofError(
                    no,
                    "BadSubstitution",
                    "substitution must map exactly the variables of the cited step",
                )
            if substitute(premise, mapping) != step.formula:
                raise ProofError(no, "BadSubstitution", "formula is not the substitution instance claimed")
        elif isinstance(j, MP):
            _ref(j.major, i, no, "modus ponens")
            _ref(j.minor, i, no, "modus ponens")
            major = proof.steps[j.major].formula
            minor = proof.steps[j.minor].formula
            if not (isinstance(major, Bin) and major.conn is Connective.IMPLIES):
                raise ProofError(no, "BadMP", "major premise is not an implication")
            if major.left != minor:
                raise ProofError(no, "BadMP", "minor premise does not match the antecedent")
            if major.right != step.formula:
                raise ProofError(no, "BadMP", "formula is not the consequent of the major premise")
        elif isinstance(j, DefRewrite):
            _ref(j.step, i, no, "definitional rewrite")
            source = proof.steps[j.step].formula
            try:
                rewritten = apply_definition(source, j.path, j.rule, j.direction)
            except ValueError as exc:
                code = "BadPath" if "path" in str(exc) else "BadRewrite"
                raise ProofError(no, code, str(exc)) from None
            if rewritten != step.formula:
                raise ProofError(no, "BadRewrite", "formula is not the result of the rewrite")
        else:
            raise ProofError(no, "BadJustification", f"unknown justification {j!r}")
    return proof.conclusion


class ProofBuilder:
    """Accumulates primitive steps and hands out their indices.

    Emitting the same (formula, justification) pair twice returns the
    original index, and whole derivations can be memoised under a key,
    so composite constructions stay compact.
    """

    can_substitute = True

    def __init__(self) -> None:
        self._steps: list[Step] = []
        self._seen: dict[tuple, int] = {}
        self._memo: dict = {}

    def __len__(self) -> int:
        return len(self._steps)

    def formula(self, i: int) -> PropFormula:
        return self._steps[i].formula

    def proof(self) -> Proof:
        return Proof(tuple(self._steps))

    def _emit(self, formula: PropFormula, just: Justification) -> int:
        key = (formula, just)
        got = self._seen.get(key)
        if got is not None:
            return got
        self._steps.append(Step(formula, just))
        idx = len(self._steps) - 1
        self._seen[key] = idx
        return idx

    def axiom(self, axiom_id: str) -> int:
        if axiom_id not in AXIOMS:
            raise PreconditionViolated(f"unknown axiom {axiom_id}")
        return self._emit(AXIOMS[axiom_id], Axiom(axiom_id))

    def subst(self, i: int, mapping: dict[str, PropFormula]) -> int:
        premise = self.formula(i)
        full = {v: mapping.get(v, Var(v)) for v in variables(premise)}
        for v in mapping:
            if v not in full:
                raise PreconditionViolated(f"substitution maps {v}, not a variable of the premise")
        derived = substitute(premise, full)
        return self._emit(derived, Subst(i, tuple(sorted(full.items()))))

    def mp(self, major: int, minor: int) -> int:
        imp = self.formula(major)
        if not (isinstance(imp, Bin) and imp.conn is Connective.IMPLIES):
            raise PreconditionViolated("modus ponens needs an implication as major premise")
        if imp.left != self.formula(minor):
            raise PreconditionViolated("modus ponens premises do not fit together")
        return self._emit(imp.right, MP(major, minor))

    def defrw(self, i: int, path, rule: str, direction: str) -> int:
        if isinstance(path, str):
            path = parse_path(path)
        derived = apply_definition(self.formula(i), path, rule, direction)
        return self._emit(derived, DefRewrite(i, path, rule, direction))

    def axiom_instance(self, axiom_id: str, mapping: dict[str, PropFormula] | None = None) -> int:
        base = self.axiom(axiom_id)
        if not mapping:
            return base
        return self.subst(base, mapping)

    def cached(self, key, build) -> int:
        got = self._memo.get(key)
        if got is not None:
            return got
        idx = build()
        self._memo[key] = idx
        return idx


# ---------------------------------------------------------------------------
# Proof scripts


def _format_mapping(mapping: tuple[tuple[str, PropFormula], ...]) -> str:
    inner = ", ".join(f"{v} := {print_infix(f)}" for v, f in mapping)
    return "{" + inner + "}"


def serialize_proof(proof: Proof) -> str:
    """Render a checked proof in the plain numbered script format."""
    lines = []
    for i, step in enumerate(proof.steps):
        j = step.just
        if isinstance(j, Axiom):
            just = f"ax {j.axiom_id}"
        elif isinstance(j, Subst):
            just = f"subst {j.step + 1} {_format_mapping(j.mapping)}"
        elif isinstance(j, MP):
            just = f"mp {j.major + 1} {j.minor + 1}"
        else:
            just = f"def {j.step + 1} {format_path(j.path)} {j.rule} {j.direction}"
        lines.append(f"{i + 1}: {print_infix(step.formula)} ; {just}")
    return "\n".join(lines) + "\n"


def _parse_mapping(text: str, line_no: int) -> dict[str, PropFormula]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ScriptError(line_no, "substitution map must be written {v := formula, ...}")
    body = text[1:-1].strip()
    mapping: dict[str, PropFormula] = {}
    if not body:
        return mapping
    depth = 0
    parts, cur = [], []
    for ch in body:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        cur.append(ch)
    parts.append("".join(cur))
    for part in parts:
        if ":=" not in part:
            raise ScriptError(line_no, f"bad substitution entry {part.strip()!r}")
        name, expr = part.split(":=", 1)
        name = name.strip()
        if name in mapping:
            raise ScriptError(line_no, f"variable {name} mapped twice")
        mapping[name] = parse_infix(expr)
    return mapping


def parse_proof_script(text: str) -> Proof:
    """Parse the numbered script format into a Proof.

    Lines read "n: formula ; justification".  Blank lines and comments
    starting with # are ignored.  Besides the four primitive
    justifications a line may invoke a derived rule with
    "use <rule> <steps...> {inst}"; the expansion is spliced in and the
    line number keeps pointing at its conclusion.
    """
    from . import recipes

    builder = ProofBuilder()
    linemap: dict[int, int] = {}
    expect = 1
    for raw_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScriptError(raw_no, "expected 'n: formula ; justification'")
        no_text, rest = line.split(":", 1)
        try:
            no = int(no_text.strip())
        except ValueError:
            raise ScriptError(raw_no, f"bad step number {no_text.strip()!r}") from None
        if no != expect:
            raise ScriptError(raw_no, f"steps must be numbered in order; expected {expect}")
        expect += 1
        if ";" not in rest:
            raise ScriptError(raw_no, "missing ; before the justification")
        formula_text, just_text = rest.rsplit(";", 1)
        try:
            declared = parse_infix(formula_text)
        except Exception as exc:
            raise ScriptError(raw_no, f"bad formula: {exc}") from None
        just_text = just_text.strip()
        inst_text = None
        if "{" in just_text:
            brace = just_text.index("{")
            inst_text = just_text[brace:]
            just_text = just_text[:brace].strip()
        words = just_text.split()
        if not words:
            raise ScriptError(raw_no, "missing justification")
        kind = words[0]

        def refs(args: list[str], n: int | None = None) -> list[int]:
            out = []
            for a in args:
                try:
                    k = int(a)
                except ValueError:
                    raise ScriptError(raw_no, f"bad step reference {a!r}") from None
                if k not in linemap:
                    raise ScriptError(raw_no, f"step {k} is not an earlier step")
                out.append(linemap[k])
            if n is not None and len(out) != n:
                raise ScriptError(raw_no, f"{kind} needs {n} step reference(s)")
            return out

        try:
            if kind == "ax":
                if len(words) != 2:
                    raise ScriptError(raw_no, "ax needs an axiom name")
                idx = builder.axiom(words[1])
            elif kind == "subst":
                (src,) = refs(words[1:], 1)
                mapping = _parse_mapping(inst_text or "{}", raw_no)
                idx = builder.subst(src, mapping)
            elif kind == "mp":
                major, minor = refs(words[1:], 2)
                idx = builder.mp(major, minor)
            elif kind == "def":
                if len(words) != 5:
                    raise ScriptError(raw_no, "def needs: def <step> <path> <rule> <expand|fold>")
                (src,) = refs([words[1]], 1)
                idx = builder.defrw(src, parse_path(words[2]), words[3], words[4])
            elif kind == "use":
                if len(words) < 2:
                    raise ScriptError(raw_no, "use needs a rule name")
                rule = recipes.DERIVED_RULES.get(words[1])
                if rule is None:
                    raise ScriptError(raw_no, f"unknown derived rule {words[1]!r}")
                premises = refs(words[2:])
                inst = _parse_mapping(inst_text, raw_no) if inst_text else {}
                idx = rule(builder, premises, inst)
            else:
                raise ScriptError(raw_no, f"unknown justification {kind!r}")
        except ScriptError:
            raise
        except Exception as exc:
            raise ScriptError(raw_no, str(exc)) from None
        if builder.formula(idx) != declared:
            raise ScriptError(
                raw_no,
                f"declared formula differs from the derived one "
                f"({print_infix(builder.formula(idx))})",
            )
        linemap[no] = idx
    if expect == 1:
        raise ScriptError(0, "script has no steps")
    return builder.proof()


# ---------------------------------------------------------------------------
# Bounded theorem enumeration


@dataclass(frozen=True)
class Enumeration:
    """Outcome of a crank run: every theorem in emission order, each
    paired with a self-contained proof of its own ancestors."""

    theorems: tuple[tuple[PropFormula, Proof], ...]
    depth: int
    budget_exhausted: bool

    @property
    def formulas(self) -> tuple[PropFormula, ...]:
        return tuple(f for f, _ in self.theorems)

    def __contains__(self, f: PropFormula) -> bool:
        return any(f == g for g, _ in self.theorems)

    def __len__(self) -> int:
        return len(self.theorems)


_ENUM_VARS = ("p", "q", "r", "s", "t", "u")


def _candidates_by_size(depth: int) -> dict[int, list[PropFormula]]:
    names = _ENUM_VARS[: min(depth, len(_ENUM_VARS))]
    by_size: dict[int, list[PropFormula]] = {1: [Var(n) for n in names]}
    for n in range(2, depth + 1):
        layer: list[PropFormula] = [Not(f) for f in by_size[n - 1]]
        for k in range(1, n - 1):
            for a in by_size[k]:
                for b in by_size[n - 1 - k]:
                    layer.append(Or_(a, b))
        by_size[n] = layer
    return by_size


def substitution_candidates(depth: int) -> list[PropFormula]:
    """All formulas over ~ and | of size at most depth, using the first
    min(depth, 6) enumeration variables, smallest first."""
    by_size = _candidates_by_size(depth)
    out: list[PropFormula] = []
    for n in range(1, depth + 1):
        out.extend(by_size.get(n, []))
    return out


def _compositions(total: int, slots: int, cap: int):
    """Ordered tuples of sizes in 1..cap summing to total."""
    if slots == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(1, min(cap, total - slots + 1) + 1):
        for rest in _compositions(total - first, slots - 1, cap):
            yield (first,) + rest


def _def_variants(f: PropFormula):
    """Every one-step definitional rewrite of f, with its address."""
    out = []
    stack: list[tuple[PropFormula, Path]] = [(f, ())]
    while stack:
        g, path = stack.pop()
        for rule in DEF_RULES:
            for direction, fn in (("expand", expand_definition), ("fold", fold_definition)):
                new = fn(g, rule)
                if new is not None:
                    out.append((replace_at(f, path, new), path, rule, direction))
        if isinstance(g, Not):
            stack.append((g.sub, path + ("s",)))
        elif isinstance(g, Bin):
            stack.append((g.left, path + ("l",)))
            stack.append((g.right, path + ("r",)))
    return out


def _cone(steps: list[Step], root: int) -> Proof:
    """The proof made of just the steps the root step depends on."""
    need = set()
    stack = [root]
    while stack:
        i = stack.pop()
        if i in need:
            continue
        need.add(i)
        j = steps[i].just
        if isinstance(j, (Subst, DefRewrite)):
            stack.append(j.step)
        elif isinstance(j, MP):
            stack.append(j.major)
            stack.append(j.minor)
    order = sorted(need)
    renumber = {old: new for new, old in enumerate(order)}
    out = []
    for old in order:
        s = steps[old]
        j = s.just
        if isinstance(j, Subst):
            j = Subst(renumber[j.step], j.mapping)
        elif isinstance(j, MP):
            j = MP(renumber[j.major], renumber[j.minor])
        elif isinstance(j, DefRewrite):
            j = DefRewrite(renumber[j.step], j.path, j.rule, j.direction)
        out.append(Step(s.formula, j))
    return Proof(tuple(out))


def enumerate_theorems(
    depth: int,
    budget: int | None = None,
    axioms: tuple[str, ...] = AXIOM_IDS,
) -> Enumeration:
    """Derive theorems breadth-first up to a substitution depth.

    At each depth d the engine substitutes every candidate formula of
    size at most d into the chosen axioms (smallest instantiations
    first), closes under modus ponens, applies one round of
    definitional rewriting everywhere, and closes under modus ponens
    again.  Each emission carries its justification, so any theorem's
    proof can be replayed through check_proof.  The budget caps how
    many distinct theorems may be derived; hitting it stops the search
    and flags the result.  The run is deterministic for fixed
    parameters.
    """
    for a in axioms:
        if a not in AXIOMS:
            raise PreconditionViolated(f"unknown axiom {a}")
    if depth < 0:
        raise PreconditionViolated("depth must be at least 0")
    steps: list[Step] = []
    index: dict[PropFormula, int] = {}
    exhausted = False

    def add(formula: PropFormula, just: Justification) -> None:
        nonlocal exhausted
        if formula in index:
            return
        if budget is not None and len(steps) >= budget:
            exhausted = True
            return
        index[formula] = len(steps)
        steps.append(Step(formula, just))

    cursor = 0
    by_antecedent: dict[PropFormula, list[int]] = {}

    def mp_closure() -> None:
        nonlocal cursor
        while cursor < len(steps) and not exhausted:
            i = cursor
            cursor += 1
            f = steps[i].formula
            if isinstance(f, Bin) and f.conn is Connective.IMPLIES:
                by_antecedent.setdefault(f.left, []).append(i)
                minor = index.get(f.left)
                if minor is not None:
                    add(f.right, MP(i, minor))
            for major in by_antecedent.get(f, ()):
                add(steps[major].formula.right, MP(major, i))

    for a in axioms:
        add(AXIOMS[a], Axiom(a))

    for d in range(1, depth + 1):
        if exhausted:
            break
        by_size = _candidates_by_size(d)
        arities = {a: variables(AXIOMS[a]) for a in axioms}
        max_total = d * max(len(v) for v in arities.values())
        for total in range(1, max_total + 1):
            if exhausted:
                break
            for a in axioms:
                if exhausted:
                    break
                vars_ = arities[a]
                for parts in _compositions(total, len(vars_), d):
                    if exhausted:
                        break
                    for combo in itertools.product(*(by_size[s] for s in parts)):
                        if exhausted:
                            break
                        mapping = dict(zip(vars_, combo))
                        add(
                            substitute(AXIOMS[a], mapping),
                            Subst(index[AXIOMS[a]], tuple(sorted(mapping.items()))),
                        )
        mp_closure()
        if exhausted:
            break
        for i in range(len(steps)):
            if exhausted:
                break
            for formula, path, rule, direction in _def_variants(steps[i].formula):
                add(formula, DefRewrite(i, path, rule, direction))
        mp_closure()

    theorems = tuple((s.formula, _cone(steps, i)) for i, s in enumerate(steps))
    return Enumeration(theorems, depth, exhausted)
