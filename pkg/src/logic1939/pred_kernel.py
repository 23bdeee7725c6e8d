"""Trusted proof kernel for the predicate calculus.

The propositional kernel carries over wholesale: a step may cite an
instance of axioms A1 to A4, apply modus ponens, or rewrite a defined
connective.  Two moves are new.  Axiom 5 relates a universal claim to
any of its instances,

    A5  (x) phi(x) -> phi(y),

and the rule of generalization passes from Pi > Phi to
Pi > (x) Phi, provided x does not occur free in Pi.  The existential
quantifier is a defined sign: (Ex) phi(x) abbreviates ~(x) ~phi(x),
unfolded and folded by the same definitional-rewrite mechanism as the
propositional connectives.

Substitution is not the propositional whole-formula replacement but the
three disciplined operations of the formula layer: renaming or
instantiating an individual variable, replacing a propositional
variable, and replacing a functional variable by a pattern.  Each is a
primitive justification recorded with its parameters, so checking a
step means redoing the operation and comparing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    PreconditionViolated,
    ProofError,
    ScriptError,
    SideConditionViolated,
    WellFormednessError,
)
from .hilbert import AXIOMS, MP, DefRewrite
from .preds import (
    Atom,
    Exists,
    Forall,
    PredFormula,
    all_names,
    bound_vars,
    free_individual_vars,
    instantiate_pattern,
    parse_pred,
    print_pred,
    rename_bound,
    subst_free,
    subst_func_var,
    subst_prop_var,
    well_formed,
)
from .props import Bin, Connective, Implies_, Not, Or_, Var, substitute, variables
from .rewrite import (
    Path,
    apply_definition,
    format_path,
    parse_path,
    replace_at,
    subterm_at,
)

_PROVABLE_CONNS = {Connective.OR, Connective.AND, Connective.IMPLIES, Connective.EQUIV}


@dataclass(frozen=True)
class PropAxiom:
    """An instance of a propositional axiom, mapping given in full."""

    axiom_id: str
    mapping: tuple[tuple[str, PredFormula], ...]


@dataclass(frozen=True)
class Ax5:
    """The instance (var) body -> body[var := free] of axiom 5."""

    var: str
    body: PredFormula
    free: str


@dataclass(frozen=True)
class SubstInd:
    step: int
    old: str
    new: str


@dataclass(frozen=True)
class SubstProp:
    step: int
    name: str
    replacement: PredFormula


@dataclass(frozen=True)
class SubstFunc:
    step: int
    name: str
    params: tuple[str, ...]
    body: PredFormula


@dataclass(frozen=True)
class UnivRule:
    step: int
    var: str


PredJustification = PropAxiom | Ax5 | MP | DefRewrite | SubstInd | SubstProp | SubstFunc | UnivRule


@dataclass(frozen=True)
class PredStep:
    formula: PredFormula
    just: PredJustification


@dataclass(frozen=True)
class PredProof:
    steps: tuple[PredStep, ...]

    @property
    def conclusion(self) -> PredFormula:
        return self.steps[-1].formula

    def __len__(self) -> int:
        return len(self.steps)


def _connectives_ok(f) -> bool:
    if isinstance(f, (Var, Atom)):
        return True
    if isinstance(f, Not):
        return _connectives_ok(f.sub)
    if isinstance(f, (Forall, Exists)):
        return _connectives_ok(f.body)
    return f.conn in _PROVABLE_CONNS and _connectives_ok(f.left) and _connectives_ok(f.right)


def ax5_formula(var: str, body: PredFormula, free: str) -> PredFormula:
    """Build the axiom 5 instance (var) body -> body[var := free]."""
    if var not in free_individual_vars(body):
        raise PreconditionViolated(f"axiom 5 binds {var}, which is not free in the scope")
    if free == var:
        raise PreconditionViolated("the instantiating variable must differ from the bound one")
    if free in bound_vars(body):
        raise PreconditionViolated(f"{free} would be captured by a quantifier in the scope")
    return well_formed(Implies_(Forall(var, body), instantiate_pattern(body, {var: free})))


# ---------------------------------------------------------------------------
# The existential quantifier as a defined sign


def _expand_exists(f):
    if isinstance(f, Exists):
        return Not(Forall(f.var, Not(f.body)))
    return None


def _fold_exists(f):
    if isinstance(f, Not) and isinstance(f.sub, Forall) and isinstance(f.sub.body, Not):
        return Exists(f.sub.var, f.sub.body.sub)
    return None


def apply_pred_definition(f: PredFormula, path: Path, rule: str, direction: str) -> PredFormula:
    """Definitional rewriting with the quantifier rule added.

    Rules imp, and and equiv behave exactly as in the propositional
    layer; rule "exists" expands (Ex) B to ~(x) ~B or folds it back.
    """
    if rule != "exists":
        return apply_definition(f, path, rule, direction)
    target = subterm_at(f, path)
    if target is None:
        raise ValueError(f"path {format_path(path)} does not address a subformula")
    if direction == "expand":
        new = _expand_exists(target)
    elif direction == "fold":
        new = _fold_exists(target)
    else:
        raise ValueError(f"direction must be expand or fold, not {direction!r}")
    if new is None:
        raise ValueError(f"subformula at {format_path(path)} does not match rule exists ({direction})")
    return replace_at(f, path, new)


# ---------------------------------------------------------------------------
# The checker


def _ref(i: int, bound: int, step_no: int, what: str) -> None:
    if not (0 <= i < bound):
        raise ProofError(step_no, "BadReference", f"{what} cites step {i + 1}, which is not an earlier step")


def check_pred_proof(proof: PredProof) -> PredFormula:
    """Check every step of a predicate-calculus proof; return the conclusion.

    Raises ProofError with a step number and a code on the first
    defective step.  Errors from the substitution operations themselves
    (capture, arity clashes and the like) propagate as raised, since
    they already say precisely what went wrong.
    """
    if not proof.steps:
        raise ProofError(0, "Empty", "a proof needs at least one step")
    for i, step in enumerate(proof.steps):
        no = i + 1
        if not _connectives_ok(step.formula):
            raise ProofError(no, "BadFormula", "formula uses a connective outside the proof system")
        try:
            well_formed(step.formula)
        except WellFormednessError as exc:
            raise ProofError(no, "Malformed", str(exc)) from None
        j = step.just
        if isinstance(j, PropAxiom):
            schema = AXIOMS.get(j.axiom_id)
            if schema is None:
                raise ProofError(no, "BadAxiom", f"unknown axiom {j.axiom_id}")
            mapping = dict(j.mapping)
            if set(mapping) != set(variables(schema)):
                raise ProofError(no, "BadAxiom", "instance must map exactly the axiom's variables")
            if substitute(schema, mapping) != step.formula:
                raise ProofError(no, "BadAxiom", f"formula is not the claimed instance of {j.axiom_id}")
        elif isinstance(j, Ax5):
            try:
                expected = ax5_formula(j.var, j.body, j.free)
            except PreconditionViolated as exc:
                raise ProofError(no, "BadAxiom", str(exc)) from None
            if expected != step.formula:
                raise ProofError(no, "BadAxiom", "formula is not the claimed instance of A5")
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
                rewritten = apply_pred_definition(source, j.path, j.rule, j.direction)
            except ValueError as exc:
                code = "BadPath" if "path" in str(exc) else "BadRewrite"
                raise ProofError(no, code, str(exc)) from None
            if rewritten != step.formula:
                raise ProofError(no, "BadRewrite", "formula is not the result of the rewrite")
        elif isinstance(j, SubstInd):
            _ref(j.step, i, no, "substitution")
            premise = proof.steps[j.step].formula
            if j.old in bound_vars(premise):
                derived = rename_bound(premise, j.old, j.new)
            else:
                derived = subst_free(premise, j.old, j.new)
            if derived != step.formula:
                raise ProofError(no, "BadSubstitution", "formula is not the substitution instance claimed")
        elif isinstance(j, SubstProp):
            _ref(j.step, i, no, "substitution")
            premise = proof.steps[j.step].formula
            if subst_prop_var(premise, j.name, j.replacement) != step.formula:
                raise ProofError(no, "BadSubstitution", "formula is not the substitution instance claimed")
        elif isinstance(j, SubstFunc):
            _ref(j.step, i, no, "substitution")
            premise = proof.steps[j.step].formula
            if subst_func_var(premise, j.name, j.params, j.body) != step.formula:
                raise ProofError(no, "BadSubstitution", "formula is not the substitution instance claimed")
        elif isinstance(j, UnivRule):
            _ref(j.step, i, no, "generalization")
            premise = proof.steps[j.step].formula
            if not (isinstance(premise, Bin) and premise.conn is Connective.IMPLIES):
                raise ProofError(no, "ShapeMismatch", "generalization needs an implication premise")
            if j.var in free_individual_vars(premise.left):
                raise SideConditionViolated(
                    f"step {no}: {j.var} occurs free in the antecedent and may not be generalized"
                )
            try:
                expected = well_formed(Implies_(premise.left, Forall(j.var, premise.right)))
            except WellFormednessError as exc:
                raise ProofError(no, "ShapeMismatch", str(exc)) from None
            if expected != step.formula:
                raise ProofError(no, "ShapeMismatch", "formula is not the generalization of the cited step")
        else:
            raise ProofError(no, "BadJustification", f"unknown justification {j!r}")
    return proof.conclusion


class PredBuilder:
    """Accumulates primitive predicate-calculus steps.

    The interface mirrors the propositional builder closely enough that
    all the derived propositional rules and theorem recipes run on it
    unchanged; they only cite axiom instances, apply modus ponens and
    rewrite definitions.  Whole-formula substitution does not exist at
    this level (can_substitute is False), so recipes derive each
    instance from the axioms directly.
    """

    can_substitute = False

    def __init__(self) -> None:
        self._steps: list[PredStep] = []
        self._seen: dict[tuple, int] = {}
        self._memo: dict = {}

    def __len__(self) -> int:
        return len(self._steps)

    def formula(self, i: int) -> PredFormula:
        return self._steps[i].formula

    def proof(self) -> PredProof:
        return PredProof(tuple(self._steps))

    def _emit(self, formula: PredFormula, just: PredJustification) -> int:
        key = (formula, just)
        got = self._seen.get(key)
        if got is not None:
            return got
        self._steps.append(PredStep(formula, just))
        idx = len(self._steps) - 1
        self._seen[key] = idx
        return idx

    def axiom_instance(self, axiom_id: str, mapping: dict[str, PredFormula] | None = None) -> int:
        schema = AXIOMS.get(axiom_id)
        if schema is None:
            raise PreconditionViolated(f"unknown axiom {axiom_id}")
        mapping = dict(mapping or {})
        full = {v: mapping.get(v, Var(v)) for v in variables(schema)}
        for v in mapping:
            if v not in full:
                raise PreconditionViolated(f"substitution maps {v}, not a variable of the axiom")
        derived = well_formed(substitute(schema, full))
        return self._emit(derived, PropAxiom(axiom_id, tuple(sorted(full.items()))))

    def ax5(self, var: str, body: PredFormula, free: str) -> int:
        return self._emit(ax5_formula(var, body, free), Ax5(var, body, free))

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
        derived = apply_pred_definition(self.formula(i), path, rule, direction)
        return self._emit(derived, DefRewrite(i, path, rule, direction))

    def univ(self, i: int, var: str) -> int:
        premise = self.formula(i)
        if not (isinstance(premise, Bin) and premise.conn is Connective.IMPLIES):
            raise PreconditionViolated("generalization needs an implication premise")
        if var in free_individual_vars(premise.left):
            raise SideConditionViolated(f"{var} occurs free in the antecedent and may not be generalized")
        derived = well_formed(Implies_(premise.left, Forall(var, premise.right)))
        return self._emit(derived, UnivRule(i, var))

    def substi(self, i: int, old: str, new: str) -> int:
        premise = self.formula(i)
        if old in bound_vars(premise):
            derived = rename_bound(premise, old, new)
        else:
            derived = subst_free(premise, old, new)
        return self._emit(derived, SubstInd(i, old, new))

    def substp(self, i: int, name: str, replacement: PredFormula) -> int:
        derived = subst_prop_var(self.formula(i), name, replacement)
        return self._emit(derived, SubstProp(i, name, replacement))

    def substf(self, i: int, name: str, params, body: PredFormula) -> int:
        params = tuple(params)
        derived = subst_func_var(self.formula(i), name, params, body)
        return self._emit(derived, SubstFunc(i, name, params, body))

    def cached(self, key, build) -> int:
        got = self._memo.get(key)
        if got is not None:
            return got
        idx = build()
        self._memo[key] = idx
        return idx


# ---------------------------------------------------------------------------
# Derived rules of passage

_FRESH_POOL = ("y", "z", "u", "v", "w", "t", "s")


def _fresh_var(used) -> str:
    for name in _FRESH_POOL:
        if name not in used:
            return name
    k = 1
    while f"v{k}" in used:
        k += 1
    return f"v{k}"


def _implication(b, i):
    f = b.formula(i)
    if not (isinstance(f, Bin) and f.conn is Connective.IMPLIES):
        raise PreconditionViolated("this rule needs an implication premise")
    return f.left, f.right


def rule_i(b, i, var: str) -> int:
    """From Phi conclude (var) Phi.

    Generalization applies only to implications, so the premise is
    first adjoined to the tautologous antecedent p | ~p, which contains
    no individual variable and is then discharged again.
    """
    from .recipes import r_adjoin, thm_excluded_middle_comm

    em = Or_(Var("p"), Not(Var("p")))
    a = r_adjoin(b, i, em)
    u = b.univ(a, var)
    return b.mp(u, thm_excluded_middle_comm(b, Var("p")))


def _thm6_instance(b, var: str, ant: PredFormula, cons: PredFormula) -> int:
    """(var)[ant -> cons] -> ((var) ant -> (var) cons), both patterns in var."""
    from .recipes import r_export, r_mp_under, r_mult, r_syll, thm_conj_elim_l, thm_conj_elim_r

    def build():
        y = _fresh_var(all_names(ant) | all_names(cons) | {var})
        ay = instantiate_pattern(ant, {var: y})
        cy = instantiate_pattern(cons, {var: y})
        s1 = b.ax5(var, Implies_(ant, cons), y)
        s2 = b.ax5(var, ant, y)
        s3 = r_mult(b, s1, s2)
        el = thm_conj_elim_l(b, Implies_(ay, cy), ay)
        er = thm_conj_elim_r(b, Implies_(ay, cy), ay)
        s4 = r_mp_under(b, er, el)
        s5 = r_syll(b, s3, s4)
        s6 = b.univ(s5, y)
        s7 = r_export(b, s6)
        return b.substi(s7, y, var)

    return b.cached(("thm6", var, ant, cons), build)


def rule_ii(b, i, var: str) -> int:
    """From A > B conclude (var) A > (var) B."""
    ant, cons = _implication(b, i)
    gen = rule_i(b, i, var)
    t6 = _thm6_instance(b, var, ant, cons)
    return b.mp(t6, gen)


def rule_iii(b, i, var: str) -> int:
    """From A = B conclude (var) A = (var) B."""
    from .recipes import r_equiv_elim_l, r_equiv_elim_r, r_equiv_intro

    f = b.formula(i)
    if not (isinstance(f, Bin) and f.conn is Connective.EQUIV):
        raise PreconditionViolated("this rule needs an equivalence premise")
    l = r_equiv_elim_l(b, i)
    r = r_equiv_elim_r(b, i)
    return r_equiv_intro(b, rule_ii(b, l, var), rule_ii(b, r, var))


def rule_13(b, i, var: str) -> int:
    """From Psi > Phi, var free only in Psi, conclude (E var) Psi > Phi."""
    from .recipes import r_transpose, r_transpose_np

    t = r_transpose(b, i)
    u = b.univ(t, var)
    t2 = r_transpose_np(b, u)
    return b.defrw(t2, ("l",), "exists", "fold")


def rule_15(b, i, var: str) -> int:
    """From A > B conclude (E var) A > (E var) B."""
    from .recipes import r_syll, r_transpose_pn

    ant, cons = _implication(b, i)
    y = _fresh_var(all_names(b.formula(i)) | {var})
    cons_y = instantiate_pattern(cons, {var: y})
    s1 = b.ax5(y, Not(cons_y), var)
    s2 = r_transpose_pn(b, s1)
    s3 = b.defrw(s2, ("r",), "exists", "fold")
    s4 = r_syll(b, i, s3)
    s5 = rule_13(b, s4, var)
    return b.substi(s5, y, var)


def _prule(fn, name: str):
    def run(b, premises, var):
        if len(premises) != 1:
            raise PreconditionViolated(f"{name} needs exactly 1 premise")
        return fn(b, premises[0], var)

    return run


PRED_RULES = {
    "RuleI": _prule(rule_i, "RuleI"),
    "RuleII": _prule(rule_ii, "RuleII"),
    "RuleIII": _prule(rule_iii, "RuleIII"),
    "Rule13": _prule(rule_13, "Rule13"),
    "Rule15": _prule(rule_15, "Rule15"),
}


def expand_derived_pred_rule(b, rule_id: str, premises, var: str) -> int:
    """Expand a derived quantifier rule into primitive steps on b."""
    rule = PRED_RULES.get(rule_id)
    if rule is None:
        raise PreconditionViolated(f"unknown derived rule {rule_id!r}")
    return rule(b, premises, var)


# ---------------------------------------------------------------------------
# The theorems on quantifiers

_P = Var("p")


def _phi(v: str) -> Atom:
    return Atom("phi", (v,))


def _psi(v: str) -> Atom:
    return Atom("psi", (v,))


def _chi(v: str) -> Atom:
    return Atom("chi", (v,))


def _thm1_instance(b, var: str, body: PredFormula, free: str) -> int:
    """body[var := free] -> (E var) body."""
    from .recipes import r_transpose_pn

    s1 = b.ax5(var, Not(body), free)
    s2 = r_transpose_pn(b, s1)
    return b.defrw(s2, ("r",), "exists", "fold")


def pthm_1(b) -> int:
    return _thm1_instance(b, "x", _phi("x"), "y")


def pthm_2(b) -> int:
    from .recipes import r_syll

    s1 = b.ax5("x", _phi("x"), "y")
    return r_syll(b, s1, _thm1_instance(b, "x", _phi("x"), "y"))


def pthm_3(b) -> int:
    from .recipes import thm_dn_equiv

    d = thm_dn_equiv(b, Forall("x", Not(_phi("x"))))
    return b.defrw(d, ("l", "s"), "exists", "fold")


def pthm_4(b) -> int:
    from .recipes import (
        r_compose,
        r_equiv_intro,
        r_syll,
        thm_conj_elim_l,
        thm_conj_elim_r,
        thm_mult_left,
    )
    from .props import And_

    allphi = Forall("x", _phi("x"))
    s1 = b.ax5("x", _phi("x"), "y")
    s2 = b.mp(thm_mult_left(b, allphi, _phi("y"), _P), s1)
    s3 = b.univ(s2, "y")
    d1 = b.substi(s3, "y", "x")
    s4 = b.ax5("x", And_(_P, _phi("x")), "y")
    s5 = r_syll(b, s4, thm_conj_elim_r(b, _P, _phi("y")))
    s6 = r_syll(b, s4, thm_conj_elim_l(b, _P, _phi("y")))
    s7 = b.univ(s5, "y")
    s8 = r_compose(b, s6, s7)
    d2 = b.substi(s8, "y", "x")
    return r_equiv_intro(b, d1, d2)


def pthm_5(b) -> int:
    from .recipes import (
        r_add_left,
        r_equiv_intro,
        r_export,
        r_import,
        r_syll,
        thm_classical_or,
        thm_tollendo_exported,
    )

    s1 = b.ax5("x", _phi("x"), "y")
    s2 = r_add_left(b, s1, _P)
    s3 = b.univ(s2, "y")
    d1 = b.substi(s3, "y", "x")
    s4 = b.ax5("x", Or_(_P, _phi("x")), "y")
    s5 = r_syll(b, s4, thm_tollendo_exported(b, _P, _phi("y")))
    s6 = r_import(b, s5)
    s7 = b.univ(s6, "y")
    s8 = r_export(b, s7)
    s9 = r_syll(b, s8, thm_classical_or(b, _P, Forall("y", _phi("y"))))
    d2 = b.substi(s9, "y", "x")
    return r_equiv_intro(b, d1, d2)


def pthm_6(b) -> int:
    return _thm6_instance(b, "x", _phi("x"), _psi("x"))


def pthm_10(b) -> int:
    from .recipes import r_equiv_intro, r_equiv_neg, thm_dn_elim, thm_dn_intro

    d = r_equiv_intro(b, thm_dn_intro(b, _phi("x")), thm_dn_elim(b, _phi("x")))
    g = rule_iii(b, d, "x")
    n = r_equiv_neg(b, g)
    return b.defrw(n, ("r",), "exists", "fold")


def pthm_10p(b) -> int:
    from .recipes import r_add_left, r_equiv_elim_l, thm_excluded_middle_comm

    allphi = Forall("x", _phi("x"))
    el = r_equiv_elim_l(b, pthm_10(b))
    al = r_add_left(b, el, allphi)
    return b.mp(al, thm_excluded_middle_comm(b, allphi))


def _thm11_instance(b, var: str, left: PredFormula, right: PredFormula) -> int:
    """(var)[left & right] = (var) left & (var) right."""
    from .recipes import r_compose, r_equiv_intro, r_mult, thm_conj_elim_l, thm_conj_elim_r

    g1 = rule_ii(b, thm_conj_elim_l(b, left, right), var)
    g2 = rule_ii(b, thm_conj_elim_r(b, left, right), var)
    d1 = r_compose(b, g1, g2)
    y = _fresh_var(all_names(left) | all_names(right) | {var})
    m = r_mult(b, b.ax5(var, left, y), b.ax5(var, right, y))
    u = b.univ(m, y)
    d2 = b.substi(u, y, var)
    return r_equiv_intro(b, d1, d2)


def pthm_11(b) -> int:
    return _thm11_instance(b, "x", _phi("x"), _psi("x"))


def pthm_12(b) -> int:
    from .recipes import r_equiv_elim_r, r_syll, thm_syll_conj

    lhs = Implies_(_phi("x"), _psi("x"))
    rhs = Implies_(_psi("x"), _chi("x"))
    star = r_equiv_elim_r(b, _thm11_instance(b, "x", lhs, rhs))
    ss = rule_ii(b, thm_syll_conj(b, _phi("x"), _psi("x"), _chi("x")), "x")
    return r_syll(b, star, ss)


def pthm_14(b) -> int:
    from .recipes import r_syll, thm_transposition

    tr = thm_transposition(b, _phi("x"), _psi("x"))
    g = rule_ii(b, tr, "x")
    t6 = _thm6_instance(b, "x", Not(_psi("x")), Not(_phi("x")))
    tr2 = thm_transposition(b, Forall("x", Not(_psi("x"))), Forall("x", Not(_phi("x"))))
    s = r_syll(b, r_syll(b, g, t6), tr2)
    f1 = b.defrw(s, ("r", "l"), "exists", "fold")
    return b.defrw(f1, ("r", "r"), "exists", "fold")


def pthm_16(b) -> int:
    from .recipes import r_add_both, r_dilemma, r_equiv_intro, thm_add_p

    a1 = b.axiom_instance("A1", {"p": _phi("x"), "q": _psi("x")})
    r1 = rule_15(b, a1, "x")
    a2 = thm_add_p(b, _psi("x"), _phi("x"))
    r2 = rule_15(b, a2, "x")
    d2 = r_dilemma(b, r1, r2)
    t1 = _thm1_instance(b, "x", _phi("x"), "y")
    t2 = _thm1_instance(b, "x", _psi("x"), "y")
    ab = r_add_both(b, t1, t2)
    r13 = rule_13(b, ab, "y")
    d1 = b.substi(r13, "y", "x")
    return r_equiv_intro(b, d1, d2)


def pthm_exchange(b) -> int:
    from .recipes import r_equiv_intro, r_syll

    def psi(u, v):
        return Atom("psi", (u, v))

    s1 = b.ax5("x", psi("x", "y"), "u")
    s2 = b.ax5("z", Forall("x", psi("x", "z")), "y")
    s3 = r_syll(b, s2, s1)
    s4 = b.univ(s3, "y")
    s5 = b.univ(s4, "u")
    s6 = b.substi(s5, "z", "y")
    d1 = b.substi(s6, "u", "x")
    t1 = b.ax5("y", psi("x", "y"), "v")
    t2 = b.ax5("z", Forall("y", psi("z", "y")), "x")
    t3 = r_syll(b, t2, t1)
    t4 = b.univ(t3, "x")
    t5 = b.univ(t4, "v")
    t6 = b.substi(t5, "z", "x")
    d2 = b.substi(t6, "v", "y")
    return r_equiv_intro(b, d1, d2)


PRED_LIBRARY_SPECS = (
    ("1", pthm_1, "phi(y) -> (Ex)phi(x)"),
    ("2", pthm_2, "(x)phi(x) -> (Ex)phi(x)"),
    ("3", pthm_3, "~(Ex)phi(x) <-> (x)~phi(x)"),
    ("4", pthm_4, "p & (x)phi(x) <-> (x)[p & phi(x)]"),
    ("5", pthm_5, "p | (x)phi(x) <-> (x)[p | phi(x)]"),
    ("6", pthm_6, "(x)[phi(x) -> psi(x)] -> ((x)phi(x) -> (x)psi(x))"),
    ("10", pthm_10, "~(x)phi(x) <-> (Ex)~phi(x)"),
    ("10p", pthm_10p, "(x)phi(x) | (Ex)~phi(x)"),
    ("11", pthm_11, "(x)[phi(x) & psi(x)] <-> (x)phi(x) & (x)psi(x)"),
    ("12", pthm_12, "(x)[phi(x) -> psi(x)] & (x)[psi(x) -> chi(x)] -> (x)[phi(x) -> chi(x)]"),
    ("13p", pthm_1, "phi(y) -> (Ex)phi(x)"),
    ("14", pthm_14, "(x)[phi(x) -> psi(x)] -> ((Ex)phi(x) -> (Ex)psi(x))"),
    ("16", pthm_16, "(Ex)[phi(x) | psi(x)] <-> (Ex)phi(x) | (Ex)psi(x)"),
    ("exchange", pthm_exchange, "(y)(x)psi(x,y) <-> (x)(y)psi(x,y)"),
    ("example1", pthm_1, "phi(y) -> (Ex)phi(x)"),
    ("example2", pthm_6, "(x)[phi(x) -> psi(x)] -> ((x)phi(x) -> (x)psi(x))"),
)


def build_pred_theorem(b, name: str) -> int:
    """Derive a library theorem on an existing builder; return its index."""
    for key, fn, _ in PRED_LIBRARY_SPECS:
        if key == name:
            return fn(b)
    raise PreconditionViolated(f"unknown theorem {name!r}")


def pred_theorem_library() -> dict[str, PredProof]:
    """Checked kernel proofs for the quantifier theorems of the course."""
    out: dict[str, PredProof] = {}
    for name, fn, text in PRED_LIBRARY_SPECS:
        b = PredBuilder()
        idx = fn(b)
        expected = parse_pred(text)
        if b.formula(idx) != expected:
            raise AssertionError(f"theorem {name} derived {print_pred(b.formula(idx))}")
        proof = PredProof(tuple(b.proof().steps[: idx + 1]))
        check_pred_proof(proof)
        out[name] = proof
    return out


# ---------------------------------------------------------------------------
# Proof scripts


def _format_entries(pairs) -> str:
    inner = ", ".join(f"{k} := {v}" for k, v in pairs)
    return "{" + inner + "}"


def serialize_pred_proof(proof: PredProof) -> str:
    """Render a checked predicate proof in the numbered script format."""
    lines = []
    for i, step in enumerate(proof.steps):
        j = step.just
        if isinstance(j, PropAxiom):
            entries = ((v, print_pred(f)) for v, f in j.mapping)
            just = f"pax {j.axiom_id} {_format_entries(entries)}"
        elif isinstance(j, Ax5):
            entries = (("phi", print_pred(j.body)), ("x", j.var), ("y", j.free))
            just = f"ax5 {_format_entries(entries)}"
        elif isinstance(j, MP):
            just = f"mp {j.major + 1} {j.minor + 1}"
        elif isinstance(j, SubstInd):
            just = f"substi {j.step + 1} {_format_entries([(j.old, j.new)])}"
        elif isinstance(j, SubstProp):
            just = f"substp {j.step + 1} {_format_entries([(j.name, print_pred(j.replacement))])}"
        elif isinstance(j, SubstFunc):
            key = f"{j.name}({','.join(j.params)})"
            just = f"substf {j.step + 1} {_format_entries([(key, print_pred(j.body))])}"
        elif isinstance(j, UnivRule):
            just = f"univ {j.step + 1} {j.var}"
        elif j.rule == "exists":
            just = f"edef {j.step + 1} {format_path(j.path)} {j.direction}"
        else:
            just = f"def {j.step + 1} {format_path(j.path)} {j.rule} {j.direction}"
        lines.append(f"{i + 1}: {print_pred(step.formula)} ; {just}")
    return "\n".join(lines) + "\n"


def _split_entries(text: str, line_no: int) -> list[tuple[str, str]]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ScriptError(line_no, "substitution map must be written {v := formula, ...}")
    body = text[1:-1].strip()
    if not body:
        return []
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
    entries = []
    for part in parts:
        if ":=" not in part:
            raise ScriptError(line_no, f"bad substitution entry {part.strip()!r}")
        name, expr = part.split(":=", 1)
        entries.append((name.strip(), expr.strip()))
    return entries


def _ident(text: str, line_no: int) -> str:
    if not (text and text[0].isalpha() and all(c.isalnum() or c == "_" for c in text)):
        raise ScriptError(line_no, f"expected a variable name, got {text!r}")
    return text


def parse_pred_proof_script(text: str) -> PredProof:
    """Parse the numbered predicate script format into a PredProof.

    Lines read "n: formula ; justification".  The justifications are
    pax <axiom> {..}, ax5 {phi := .., x := .., y := ..}, mp <i> <j>,
    substi <i> {old := new}, substp <i> {p := formula},
    substf <i> {phi(x,..) := formula}, def <i> <path> <rule> <dir>,
    edef <i> <path> <expand|fold>, univ <i> <var>,
    thm <name> {inst} for an instance of a propositional library
    theorem, and "use <rule> <steps...> <var>" or
    "use <rule> <steps...> {inst}" for derived rules, whose expansions
    are spliced in.
    """
    from . import recipes

    builder = PredBuilder()
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
            declared = parse_pred(formula_text)
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

        def entry1(allow_key_args: bool = False) -> tuple[str, tuple[str, ...], str]:
            entries = _split_entries(inst_text or "{}", raw_no)
            if len(entries) != 1:
                raise ScriptError(raw_no, f"{kind} needs exactly one substitution entry")
            key, value = entries[0]
            if "(" in key:
                if not allow_key_args:
                    raise ScriptError(raw_no, f"bad substitution entry {key!r}")
                if not key.endswith(")"):
                    raise ScriptError(raw_no, f"bad substitution entry {key!r}")
                name, arglist = key[:-1].split("(", 1)
                params = tuple(_ident(a.strip(), raw_no) for a in arglist.split(","))
                return _ident(name.strip(), raw_no), params, value
            return _ident(key, raw_no), (), value

        try:
            if kind == "pax":
                if len(words) != 2:
                    raise ScriptError(raw_no, "pax needs an axiom name")
                entries = _split_entries(inst_text or "{}", raw_no)
                mapping = {}
                for key, value in entries:
                    if key in mapping:
                        raise ScriptError(raw_no, f"variable {key} mapped twice")
                    mapping[_ident(key, raw_no)] = parse_pred(value)
                idx = builder.axiom_instance(words[1], mapping)
            elif kind == "ax5":
                entries = dict(_split_entries(inst_text or "{}", raw_no))
                if set(entries) != {"phi", "x", "y"}:
                    raise ScriptError(raw_no, "ax5 needs entries for phi, x and y")
                idx = builder.ax5(
                    _ident(entries["x"], raw_no),
                    parse_pred(entries["phi"]),
                    _ident(entries["y"], raw_no),
                )
            elif kind == "mp":
                major, minor = refs(words[1:], 2)
                idx = builder.mp(major, minor)
            elif kind == "substi":
                (src,) = refs(words[1:], 1)
                old, _, new = entry1()
                idx = builder.substi(src, old, _ident(new, raw_no))
            elif kind == "substp":
                (src,) = refs(words[1:], 1)
                name, _, value = entry1()
                idx = builder.substp(src, name, parse_pred(value))
            elif kind == "substf":
                (src,) = refs(words[1:], 1)
                name, params, value = entry1(allow_key_args=True)
                if not params:
                    raise ScriptError(raw_no, "substf key must list the pattern's variables")
                idx = builder.substf(src, name, params, parse_pred(value))
            elif kind == "def":
                if len(words) != 5:
                    raise ScriptError(raw_no, "def needs: def <step> <path> <rule> <expand|fold>")
                (src,) = refs([words[1]], 1)
                idx = builder.defrw(src, parse_path(words[2]), words[3], words[4])
            elif kind == "edef":
                if len(words) != 4:
                    raise ScriptError(raw_no, "edef needs: edef <step> <path> <expand|fold>")
                (src,) = refs([words[1]], 1)
                idx = builder.defrw(src, parse_path(words[2]), "exists", words[3])
            elif kind == "univ":
                if len(words) != 3:
                    raise ScriptError(raw_no, "univ needs: univ <step> <var>")
                (src,) = refs([words[1]], 1)
                idx = builder.univ(src, _ident(words[2], raw_no))
            elif kind == "thm":
                if len(words) != 2:
                    raise ScriptError(raw_no, "thm needs a theorem name")
                inst = {}
                for key, value in _split_entries(inst_text or "{}", raw_no):
                    inst[_ident(key, raw_no)] = parse_pred(value)
                try:
                    idx = recipes.build_theorem_instance(builder, words[1], inst)
                except KeyError:
                    raise ScriptError(raw_no, f"unknown theorem {words[1]!r}") from None
            elif kind == "use":
                if len(words) < 2:
                    raise ScriptError(raw_no, "use needs a rule name")
                name = words[1]
                if name in PRED_RULES:
                    if len(words) < 4:
                        raise ScriptError(raw_no, f"{name} needs step references and a variable")
                    premises = refs(words[2:-1])
                    idx = PRED_RULES[name](builder, premises, _ident(words[-1], raw_no))
                else:
                    rule = recipes.DERIVED_RULES.get(name)
                    if rule is None:
                        raise ScriptError(raw_no, f"unknown derived rule {name!r}")
                    premises = refs(words[2:])
                    inst = {}
                    for key, value in _split_entries(inst_text or "{}", raw_no):
                        inst[_ident(key, raw_no)] = parse_pred(value)
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
                f"({print_pred(builder.formula(idx))})",
            )
        linemap[no] = idx
    if expect == 1:
        raise ScriptError(0, "script has no steps")
    return builder.proof()
