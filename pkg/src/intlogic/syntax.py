"""Vocabularies, terms and formulas of the integral-logic language.

Formulas are immutable trees with structural equality, which downstream code
relies on everywhere (approximation relations compare sentences, the proof
checker compares lines, test oracles compare round-tripped trees).

The connective inventory: weak conjunction/disjunction (min/max), strong
conjunction/disjunction (Lukasiewicz t-norm/t-conorm), Lukasiewicz
implication, negation, rational truth constants, the three quantifiers
ALL / EX / INT, and equality between two quantifier expressions.  Term
equality `eq` and similarity `approx` are distinguished binary predicates,
enabled per vocabulary by the `has_eq` / `has_approx` flags; they are not
formula constructors of their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Mapping, Union

from .errors import ArityMismatch, CaptureError, FlagMissing, UnknownSymbol
from .rational import unit

#: Names with fixed meaning in the concrete syntax; never usable as symbols.
RESERVED_NAMES = frozenset({"ALL", "EX", "INT", "rat", "eq", "approx"})

EQ_PRED = "eq"
APPROX_PRED = "approx"


@dataclass(frozen=True)
class Vocabulary:
    """A signature: predicate and function symbols with arities, constants.

    `has_eq` admits '=' between quantifier expressions (and the reserved
    binary predicate `eq`); `has_approx` admits the reserved similarity
    predicate `approx`.
    """

    predicates: tuple[tuple[str, int], ...] = ()
    functions: tuple[tuple[str, int], ...] = ()
    constants: tuple[str, ...] = ()
    has_eq: bool = True
    has_approx: bool = False

    def __post_init__(self):
        object.__setattr__(self, "predicates", tuple((str(n), int(a)) for n, a in self.predicates))
        object.__setattr__(self, "functions", tuple((str(n), int(a)) for n, a in self.functions))
        object.__setattr__(self, "constants", tuple(str(n) for n in self.constants))
        names = [n for n, _ in self.predicates] + [n for n, _ in self.functions] + list(self.constants)
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ValueError(f"duplicate symbol names in vocabulary: {dupes}")
        for n in names:
            if n in RESERVED_NAMES:
                raise ValueError(f"symbol name {n!r} is reserved")
        for n, a in self.predicates + self.functions:
            if a < 1:
                raise ValueError(f"symbol {n!r} must have arity >= 1, got {a}")

    def predicate_arity(self, name: str) -> int | None:
        if name == EQ_PRED:
            return 2 if self.has_eq else None
        if name == APPROX_PRED:
            return 2 if self.has_approx else None
        for n, a in self.predicates:
            if n == name:
                return a
        return None

    def function_arity(self, name: str) -> int | None:
        for n, a in self.functions:
            if n == name:
                return a
        return None

    def is_constant(self, name: str) -> bool:
        return name in self.constants

    def symbol_names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.predicates) | frozenset(n for n, _ in self.functions) | frozenset(self.constants)

    def contains(self, other: "Vocabulary") -> bool:
        """True when every symbol of `other` is declared here with the same arity."""
        return (
            set(other.predicates) <= set(self.predicates)
            and set(other.functions) <= set(self.functions)
            and set(other.constants) <= set(self.constants)
            and (self.has_eq or not other.has_eq)
            and (self.has_approx or not other.has_approx)
        )

    def merged(self, other: "Vocabulary") -> "Vocabulary":
        """Union of two vocabularies; arities must agree on shared names."""
        preds = dict(self.predicates)
        for n, a in other.predicates:
            if preds.get(n, a) != a:
                raise ArityMismatch(f"predicate {n!r} declared with arities {preds[n]} and {a}")
            preds[n] = a
        funcs = dict(self.functions)
        for n, a in other.functions:
            if funcs.get(n, a) != a:
                raise ArityMismatch(f"function {n!r} declared with arities {funcs[n]} and {a}")
            funcs[n] = a
        consts = list(self.constants) + [c for c in other.constants if c not in self.constants]
        return Vocabulary(
            tuple(sorted(preds.items())),
            tuple(sorted(funcs.items())),
            tuple(consts),
            has_eq=self.has_eq or other.has_eq,
            has_approx=self.has_approx or other.has_approx,
        )

    def renamed(self, mapping: Mapping[str, str]) -> "Vocabulary":
        ren = lambda n: mapping.get(n, n)
        return Vocabulary(
            tuple((ren(n), a) for n, a in self.predicates),
            tuple((ren(n), a) for n, a in self.functions),
            tuple(ren(n) for n in self.constants),
            has_eq=self.has_eq,
            has_approx=self.has_approx,
        )


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Constant:
    name: str


@dataclass(frozen=True)
class FuncApp:
    func: str
    args: tuple["Term", ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


Term = Union[Variable, Constant, FuncApp]


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class TruthConst:
    """A rational truth constant; its value is pinned to Q intersect [0,1]."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", unit(self.value))


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class StrongAnd:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class StrongOr:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Integral:
    var: str
    body: "Formula"


class Quant(Enum):
    FORALL = "ALL"
    EXISTS = "EX"
    INTEGRAL = "INT"


@dataclass(frozen=True)
class QuantExpr:
    """A quantifier expression Q x . body with Q in {ALL, EX, INT}."""

    quant: Quant
    var: str
    body: "Formula"

    def to_formula(self) -> "Formula":
        cls = {Quant.FORALL: Forall, Quant.EXISTS: Exists, Quant.INTEGRAL: Integral}[self.quant]
        return cls(self.var, self.body)

    @classmethod
    def from_formula(cls, formula: "Formula") -> "QuantExpr":
        if isinstance(formula, Forall):
            return cls(Quant.FORALL, formula.var, formula.body)
        if isinstance(formula, Exists):
            return cls(Quant.EXISTS, formula.var, formula.body)
        if isinstance(formula, Integral):
            return cls(Quant.INTEGRAL, formula.var, formula.body)
        raise ValueError("'=' may only relate quantifier expressions")


@dataclass(frozen=True)
class QuantEq:
    """Equality between two quantifier expressions (top-level only)."""

    left: QuantExpr
    right: QuantExpr


Formula = Union[
    Atom, TruthConst, Not, And, Or, StrongAnd, StrongOr, Implies,
    Forall, Exists, Integral, QuantEq,
]

_BINARY = (And, Or, StrongAnd, StrongOr, Implies)
_QUANTIFIERS = (Forall, Exists, Integral)


def is_quantifier_formula(formula: Formula) -> bool:
    return isinstance(formula, _QUANTIFIERS)


# ---------------------------------------------------------------------------
# Free variables and substitution


def term_vars(term: Term) -> frozenset[str]:
    if isinstance(term, Variable):
        return frozenset({term.name})
    if isinstance(term, Constant):
        return frozenset()
    out: frozenset[str] = frozenset()
    for arg in term.args:
        out |= term_vars(arg)
    return out


def free_vars(formula: Formula) -> frozenset[str]:
    """Variables with at least one free occurrence; quantifiers bind theirs."""
    if isinstance(formula, Atom):
        out: frozenset[str] = frozenset()
        for arg in formula.args:
            out |= term_vars(arg)
        return out
    if isinstance(formula, TruthConst):
        return frozenset()
    if isinstance(formula, Not):
        return free_vars(formula.body)
    if isinstance(formula, _BINARY):
        return free_vars(formula.left) | free_vars(formula.right)
    if isinstance(formula, _QUANTIFIERS):
        return free_vars(formula.body) - {formula.var}
    if isinstance(formula, QuantEq):
        left = free_vars(formula.left.body) - {formula.left.var}
        right = free_vars(formula.right.body) - {formula.right.var}
        return left | right
    raise TypeError(f"not a formula: {formula!r}")


def _subst_term(term: Term, var: str, repl: Term) -> Term:
    if isinstance(term, Variable):
        return repl if term.name == var else term
    if isinstance(term, Constant):
        return term
    return FuncApp(term.func, tuple(_subst_term(a, var, repl) for a in term.args))


def _subst_binder(binder_var: str, body: Formula, var: str, term: Term):
    # caller guarantees binder_var != var
    if var in free_vars(body) and binder_var in term_vars(term):
        raise CaptureError(
            f"substituting for {var!r} would capture {binder_var!r} bound here"
        )
    return substitute(body, var, term)


def substitute(formula: Formula, var: str, term: Term) -> Formula:
    """Replace every free occurrence of `var` by `term` (capture-checked)."""
    if isinstance(formula, Atom):
        return Atom(formula.pred, tuple(_subst_term(a, var, term) for a in formula.args))
    if isinstance(formula, TruthConst):
        return formula
    if isinstance(formula, Not):
        return Not(substitute(formula.body, var, term))
    if isinstance(formula, _BINARY):
        return type(formula)(substitute(formula.left, var, term), substitute(formula.right, var, term))
    if isinstance(formula, _QUANTIFIERS):
        if formula.var == var:
            return formula
        return type(formula)(formula.var, _subst_binder(formula.var, formula.body, var, term))
    if isinstance(formula, QuantEq):
        sides = []
        for side in (formula.left, formula.right):
            if side.var == var:
                sides.append(side)
            else:
                sides.append(QuantExpr(side.quant, side.var, _subst_binder(side.var, side.body, var, term)))
        return QuantEq(sides[0], sides[1])
    raise TypeError(f"not a formula: {formula!r}")


# ---------------------------------------------------------------------------
# Well-formedness


def _check_term(term: Term, voc: Vocabulary) -> None:
    if isinstance(term, Variable):
        return
    if isinstance(term, Constant):
        if not voc.is_constant(term.name):
            raise UnknownSymbol(term.name, message=f"constant {term.name!r} is not declared")
        return
    arity = voc.function_arity(term.func)
    if arity is None:
        raise UnknownSymbol(term.func, message=f"function {term.func!r} is not declared")
    if arity != len(term.args):
        raise ArityMismatch(f"function {term.func!r} expects {arity} arguments, got {len(term.args)}")
    for arg in term.args:
        _check_term(arg, voc)


def check_formula(formula: Formula, voc: Vocabulary, _top: bool = True) -> None:
    """Raise unless `formula` is well-formed over `voc`.

    Quantifier equality is only admitted at the top level and only when
    the vocabulary's `has_eq` flag is set.
    """
    if isinstance(formula, Atom):
        arity = voc.predicate_arity(formula.pred)
        if arity is None:
            if formula.pred == EQ_PRED or formula.pred == APPROX_PRED:
                raise FlagMissing(f"predicate {formula.pred!r} is not enabled in this vocabulary")
            raise UnknownSymbol(formula.pred, message=f"predicate {formula.pred!r} is not declared")
        if arity != len(formula.args):
            raise ArityMismatch(f"predicate {formula.pred!r} expects {arity} arguments, got {len(formula.args)}")
        for arg in formula.args:
            _check_term(arg, voc)
        return
    if isinstance(formula, TruthConst):
        return
    if isinstance(formula, Not):
        check_formula(formula.body, voc, _top=False)
        return
    if isinstance(formula, _BINARY):
        check_formula(formula.left, voc, _top=False)
        check_formula(formula.right, voc, _top=False)
        return
    if isinstance(formula, _QUANTIFIERS):
        check_formula(formula.body, voc, _top=False)
        return
    if isinstance(formula, QuantEq):
        if not _top:
            raise ValueError("quantifier equality must be the top-level connective")
        if not voc.has_eq:
            raise FlagMissing("quantifier equality is not enabled in this vocabulary")
        check_formula(formula.left.body, voc, _top=False)
        check_formula(formula.right.body, voc, _top=False)
        return
    raise TypeError(f"not a formula: {formula!r}")


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order walk over the formula tree (QuantEq yields the two bodies)."""
    yield formula
    if isinstance(formula, Not):
        yield from subformulas(formula.body)
    elif isinstance(formula, _BINARY):
        yield from subformulas(formula.left)
        yield from subformulas(formula.right)
    elif isinstance(formula, _QUANTIFIERS):
        yield from subformulas(formula.body)
    elif isinstance(formula, QuantEq):
        yield from subformulas(formula.left.body)
        yield from subformulas(formula.right.body)


def _collect_term_symbols(term: Term, funcs: dict, consts: set) -> None:
    if isinstance(term, Constant):
        consts.add(term.name)
    elif isinstance(term, FuncApp):
        seen = funcs.setdefault(term.func, len(term.args))
        if seen != len(term.args):
            raise ArityMismatch(f"function {term.func!r} used with arities {seen} and {len(term.args)}")
        for arg in term.args:
            _collect_term_symbols(arg, funcs, consts)


def infer_vocabulary(formulas: Formula | Iterable[Formula]) -> Vocabulary:
    """The minimal vocabulary over which the given formulas are well-formed."""
    if not isinstance(formulas, (list, tuple, set, frozenset)):
        formulas = [formulas]
    preds: dict[str, int] = {}
    funcs: dict[str, int] = {}
    consts: set[str] = set()
    has_approx = False
    for root in formulas:
        for sub in subformulas(root):
            if isinstance(sub, Atom):
                if sub.pred == APPROX_PRED:
                    has_approx = True
                elif sub.pred != EQ_PRED:
                    seen = preds.setdefault(sub.pred, len(sub.args))
                    if seen != len(sub.args):
                        raise ArityMismatch(
                            f"predicate {sub.pred!r} used with arities {seen} and {len(sub.args)}"
                        )
                for arg in sub.args:
                    _collect_term_symbols(arg, funcs, consts)
    # quantifier equality is part of the language proper, so has_eq stays on
    return Vocabulary(
        tuple(sorted(preds.items())),
        tuple(sorted(funcs.items())),
        tuple(sorted(consts)),
        has_eq=True,
        has_approx=has_approx,
    )


# ---------------------------------------------------------------------------
# Symbol renaming (for the renaming closure property)


def _rename_term(term: Term, mapping: Mapping[str, str]) -> Term:
    if isinstance(term, Variable):
        return term
    if isinstance(term, Constant):
        return Constant(mapping.get(term.name, term.name))
    return FuncApp(mapping.get(term.func, term.func), tuple(_rename_term(a, mapping) for a in term.args))


def rename_symbols(formula: Formula, mapping: Mapping[str, str]) -> Formula:
    """Apply a vocabulary renaming to every symbol occurrence (variables untouched)."""
    if isinstance(formula, Atom):
        return Atom(mapping.get(formula.pred, formula.pred), tuple(_rename_term(a, mapping) for a in formula.args))
    if isinstance(formula, TruthConst):
        return formula
    if isinstance(formula, Not):
        return Not(rename_symbols(formula.body, mapping))
    if isinstance(formula, _BINARY):
        return type(formula)(rename_symbols(formula.left, mapping), rename_symbols(formula.right, mapping))
    if isinstance(formula, _QUANTIFIERS):
        return type(formula)(formula.var, rename_symbols(formula.body, mapping))
    if isinstance(formula, QuantEq):
        return QuantEq(
            QuantExpr(formula.left.quant, formula.left.var, rename_symbols(formula.left.body, mapping)),
            QuantExpr(formula.right.quant, formula.right.var, rename_symbols(formula.right.body, mapping)),
        )
    raise TypeError(f"not a formula: {formula!r}")


# ---------------------------------------------------------------------------
# Congruence axiom generation for '=' and 'approx'


def _fresh_names(base: str, count: int, taken: frozenset[str]) -> list[str]:
    out = []
    for i in range(1, count + 1):
        name = f"{base}{i}"
        while name in taken:
            name += "_"
        out.append(name)
    return out


def _fold_and(parts: list[Formula]) -> Formula:
    acc = parts[0]
    for part in parts[1:]:
        acc = And(acc, part)
    return acc


def _biconditional(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def congruence_axioms(voc: Vocabulary, relation: Literal["eq", "approx"]) -> list[Formula]:
    """Congruence formulas for the chosen relation, one per function and predicate.

    For each n-ary function f:  (x1 R y1 /\\ ... /\\ xn R yn) -> f(xs) R f(ys).
    For each n-ary predicate P the consequent relates the two atoms: a single
    implication P(xs) -> P(ys) for `eq`, and the biconditional (truth-value
    similarity) for `approx`, since the similarity of two formula values is
    their Lukasiewicz biresiduum.
    """
    if relation == "eq":
        if not voc.has_eq:
            raise FlagMissing("vocabulary does not enable '='")
        rel_pred = EQ_PRED
    elif relation == "approx":
        if not voc.has_approx:
            raise FlagMissing("vocabulary does not enable 'approx'")
        rel_pred = APPROX_PRED
    else:
        raise ValueError(f"relation must be 'eq' or 'approx', got {relation!r}")

    taken = voc.symbol_names() | RESERVED_NAMES
    axioms: list[Formula] = []

    def antecedent(xs, ys):
        return _fold_and([Atom(rel_pred, (Variable(x), Variable(y))) for x, y in zip(xs, ys)])

    for fname, arity in voc.functions:
        xs = _fresh_names("x", arity, taken)
        ys = _fresh_names("y", arity, taken)
        lhs = FuncApp(fname, tuple(Variable(x) for x in xs))
        rhs = FuncApp(fname, tuple(Variable(y) for y in ys))
        axioms.append(Implies(antecedent(xs, ys), Atom(rel_pred, (lhs, rhs))))

    for pname, arity in voc.predicates:
        xs = _fresh_names("x", arity, taken)
        ys = _fresh_names("y", arity, taken)
        left_atom = Atom(pname, tuple(Variable(x) for x in xs))
        right_atom = Atom(pname, tuple(Variable(y) for y in ys))
        if relation == "eq":
            consequent: Formula = Implies(left_atom, right_atom)
        else:
            consequent = _biconditional(left_atom, right_atom)
        axioms.append(Implies(antecedent(xs, ys), consequent))

    return axioms
