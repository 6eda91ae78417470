"""Model generation, axiom validity testing and countermodel search.

Models are drawn over value/measure grids of exact rationals: measures are
grid draws renormalized by exact division (all-zero draws redrawn), tables
are grid draws.  Exhaustive mode enumerates every grid combination in a
deterministic order; random mode is reproducible from the seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import ContainmentViolated, SearchSpaceTooLarge
from .evaluate import evaluate, evaluate_closed
from .integrals import check_semantic_integral_laws
from .model import FuzzySubset, WeakProbModel, model_to_json, reduct, relabel_universe, rename
from .parser import print_formula
from .proofs import axiom_sides
from .rational import DEFAULT_GRID, ONE, ZERO
from .reporting import Report
from .syntax import (
    APPROX_PRED,
    And,
    Atom,
    Formula,
    Not,
    StrongAnd,
    TruthConst,
    Variable,
    Vocabulary,
    check_formula,
    free_vars,
    infer_vocabulary,
    rename_symbols,
)

_ELEMENT_NAMES = "abcdefghijklmnopqrstuvwxyz"

EXHAUSTIVE_SPACE_CAP = 2_000_000


@dataclass(frozen=True)
class ModelGenSpec:
    """How to draw models: universe size, value/measure grids, seed, count."""

    size: int = 2
    value_grid: tuple[Fraction, ...] = DEFAULT_GRID
    measure_grid: tuple[Fraction, ...] = DEFAULT_GRID
    seed: int = 0
    count: int = 100
    exhaustive: bool = False

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("universe size must be >= 1")
        if not self.value_grid or not self.measure_grid:
            raise ValueError("grids must be non-empty")
        object.__setattr__(self, "value_grid", tuple(Fraction(v) for v in self.value_grid))
        object.__setattr__(self, "measure_grid", tuple(Fraction(v) for v in self.measure_grid))


def universe_names(size: int) -> tuple[str, ...]:
    if size <= len(_ELEMENT_NAMES):
        return tuple(_ELEMENT_NAMES[:size])
    return tuple(f"e{i}" for i in range(1, size + 1))


def grid_measures(size: int, grid: Sequence[Fraction]) -> list[dict[str, Fraction]]:
    """All distinct measures obtained by renormalizing grid draws, sorted."""
    names = universe_names(size)
    seen = set()
    out = []
    for draw in itertools.product(sorted(grid), repeat=size):
        total = sum(draw, ZERO)
        if total == ZERO:
            continue
        weights = tuple(w / total for w in draw)
        if weights in seen:
            continue
        seen.add(weights)
        out.append(dict(zip(names, weights)))
    return out


def _all_tables(names: tuple[str, ...], arity: int, values: Sequence) -> Iterator[dict]:
    keys = list(itertools.product(names, repeat=arity))
    for combo in itertools.product(values, repeat=len(keys)):
        yield dict(zip(keys, combo))


def _random_measure(names, grid, rng) -> dict[str, Fraction]:
    while True:
        draw = [rng.choice(grid) for _ in names]
        total = sum(draw, ZERO)
        if total != ZERO:
            return {name: w / total for name, w in zip(names, draw)}


def exhaustive_models(gen: ModelGenSpec, voc: Vocabulary) -> Iterator[WeakProbModel]:
    """Every model over the grids, in a fixed deterministic order."""
    names = universe_names(gen.size)
    measures = grid_measures(gen.size, gen.measure_grid)

    space = len(measures)
    for _, arity in voc.predicates:
        space *= len(gen.value_grid) ** (gen.size ** arity)
    for _, arity in voc.functions:
        space *= gen.size ** (gen.size ** arity)
    space *= gen.size ** len(voc.constants)
    if voc.has_approx:
        space *= len(gen.value_grid) ** (gen.size ** 2)
    if space > EXHAUSTIVE_SPACE_CAP:
        raise SearchSpaceTooLarge(f"exhaustive space has {space} models (cap {EXHAUSTIVE_SPACE_CAP})")

    pred_symbols = list(voc.predicates)
    if voc.has_approx:
        pred_symbols.append((APPROX_PRED, 2))
    pred_tables = [list(_all_tables(names, arity, sorted(gen.value_grid))) for _, arity in pred_symbols]
    func_tables = [list(_all_tables(names, arity, names)) for _, arity in voc.functions]
    const_choices = [names] * len(voc.constants)

    for measure in measures:
        for preds in itertools.product(*pred_tables):
            for funcs in itertools.product(*func_tables):
                for consts in itertools.product(*const_choices):
                    yield WeakProbModel(
                        names,
                        measure,
                        {name: table for (name, _), table in zip(pred_symbols, preds)},
                        {name: table for (name, _), table in zip(voc.functions, funcs)},
                        dict(zip(voc.constants, consts)),
                    )


def random_models(gen: ModelGenSpec, voc: Vocabulary) -> Iterator[WeakProbModel]:
    """`gen.count` models drawn reproducibly from the seed."""
    names = universe_names(gen.size)
    rng = random.Random(gen.seed)
    grid = sorted(gen.value_grid)
    mgrid = sorted(gen.measure_grid)
    pred_symbols = list(voc.predicates)
    if voc.has_approx:
        pred_symbols.append((APPROX_PRED, 2))
    for _ in range(gen.count):
        measure = _random_measure(names, mgrid, rng)
        preds = {
            name: {
                key: rng.choice(grid)
                for key in itertools.product(names, repeat=arity)
            }
            for name, arity in pred_symbols
        }
        funcs = {
            name: {
                key: rng.choice(names)
                for key in itertools.product(names, repeat=arity)
            }
            for name, arity in voc.functions
        }
        consts = {name: rng.choice(names) for name in voc.constants}
        yield WeakProbModel(names, measure, preds, funcs, consts)


def generate_models(gen: ModelGenSpec, voc: Vocabulary) -> Iterator[WeakProbModel]:
    if gen.exhaustive:
        return exhaustive_models(gen, voc)
    return random_models(gen, voc)


# ---------------------------------------------------------------------------
# Fuzzy-subset samples for the integral-law suite


def grid_fuzzy_subsets(universe: Sequence[str], grid: Sequence[Fraction],
                       arity: int = 1) -> Iterator[FuzzySubset]:
    """Every fuzzy subset of the given arity with values on the grid."""
    universe = tuple(universe)
    for table in _all_tables(universe, arity, sorted(grid)):
        yield FuzzySubset(universe, table)


def random_fuzzy_subset(universe: Sequence[str], grid: Sequence[Fraction],
                        rng: random.Random, arity: int = 1) -> FuzzySubset:
    universe = tuple(universe)
    grid = sorted(grid)
    return FuzzySubset(
        universe,
        {key: rng.choice(grid) for key in itertools.product(universe, repeat=arity)},
    )


def integral_law_suite(model: WeakProbModel, gen: ModelGenSpec) -> Report:
    """Run the five-law check over grid samples on one model.

    Exhaustive mode takes every (f, g) pair and every bivariate subset on
    the value grid (guarded against blowup); random mode takes `gen.count`
    seeded samples of each shape.
    """
    universe = model.universe
    if gen.exhaustive:
        unary_count = len(gen.value_grid) ** len(universe)
        if unary_count ** 2 > 100_000:
            raise SearchSpaceTooLarge(
                f"{unary_count}^2 sample pairs; use random sampling for this size")
        unary = list(grid_fuzzy_subsets(universe, gen.value_grid, 1))
        pairs = [(f, g) for f in unary for g in unary]
        bivariate = list(grid_fuzzy_subsets(universe, gen.value_grid, 2))
    else:
        rng = random.Random(gen.seed)
        pairs = [
            (random_fuzzy_subset(universe, gen.value_grid, rng),
             random_fuzzy_subset(universe, gen.value_grid, rng))
            for _ in range(gen.count)
        ]
        bivariate = [
            random_fuzzy_subset(universe, gen.value_grid, rng, arity=2)
            for _ in range(gen.count)
        ]
    return check_semantic_integral_laws(model, pairs, bivariate, constants=gen.value_grid)


# ---------------------------------------------------------------------------
# Axiom validation


def _axiom_instantiations(axiom: str, gen: ModelGenSpec) -> list[dict]:
    p_x = Atom("P", (Variable("x"),))
    q_x = Atom("Q", (Variable("x"),))
    r_xy = Atom("R", (Variable("x"), Variable("y")))
    if axiom == "mu1":
        bodies: list[Formula] = [Atom("P", (Variable("y"),))]
        bodies += [TruthConst(r) for r in gen.value_grid]
        return [{"v": body, "x": "x"} for body in bodies]
    if axiom == "mu2":
        return [
            {"phi": p_x, "x": "x"},
            {"phi": Not(p_x), "x": "x"},
            {"phi": And(p_x, q_x), "x": "x"},
            {"phi": StrongAnd(p_x, q_x), "x": "x"},
        ]
    if axiom in ("mu3", "mu4"):
        return [
            {"phi": p_x, "psi": q_x, "x": "x"},
            {"phi": q_x, "psi": p_x, "x": "x"},
            {"phi": p_x, "psi": p_x, "x": "x"},
        ]
    if axiom == "mu5":
        return [
            {"phi": r_xy, "x": "x", "y": "y"},
            {"phi": Atom("R", (Variable("y"), Variable("x"))), "x": "x", "y": "y"},
        ]
    raise ValueError(f"unknown axiom {axiom!r}")


def _valuations(names: Iterable[str], universe: tuple[str, ...]) -> Iterator[dict]:
    names = sorted(names)
    for combo in itertools.product(universe, repeat=len(names)):
        yield dict(zip(names, combo))


def validate_axiom(axiom: str, gen: ModelGenSpec, instances: int | None = None) -> Report:
    """Check an axiom schema over generated models and instantiations.

    mu1, mu2, mu4 and mu5 are checked as exact equalities of the two sides;
    mu3 is checked in the implication direction (left side at most the
    right).  Each violation record carries the model inline, the printed
    instantiation and the two values, so it replays directly.
    """
    report = Report()
    instantiations = _axiom_instantiations(axiom, gen)
    if instances is not None:
        instantiations = instantiations[:instances]
    for inst in instantiations:
        left, right = axiom_sides(axiom, **inst)
        voc = infer_vocabulary([left, right])
        for model in generate_models(gen, voc):
            for valuation in _valuations(free_vars(left) | free_vars(right), model.universe):
                lhs = evaluate(left, model, valuation)
                rhs = evaluate(right, model, valuation)
                report.tally()
                holds = lhs <= rhs if axiom == "mu3" else lhs == rhs
                if not holds:
                    report.add(
                        "axiom-violation",
                        axiom=axiom,
                        model=model_to_json(model),
                        instantiation=f"{print_formula(left)}  vs  {print_formula(right)}",
                        valuation=dict(valuation),
                        lhs=str(lhs),
                        rhs=str(rhs),
                    )
    return report


def mu3_equality_gap(gen: ModelGenSpec) -> dict | None:
    """A witness where mu3 read as an equality fails (the law is only <=)."""
    for inst in _axiom_instantiations("mu3", gen):
        left, right = axiom_sides("mu3", **inst)
        voc = infer_vocabulary([left, right])
        for model in generate_models(gen, voc):
            for valuation in _valuations(free_vars(left) | free_vars(right), model.universe):
                lhs = evaluate(left, model, valuation)
                rhs = evaluate(right, model, valuation)
                if lhs != rhs:
                    return {
                        "axiom": "mu3",
                        "model": model_to_json(model),
                        "instantiation": f"{print_formula(left)}  vs  {print_formula(right)}",
                        "valuation": dict(valuation),
                        "lhs": str(lhs),
                        "rhs": str(rhs),
                    }
    return None


# ---------------------------------------------------------------------------
# Countermodel search


def find_countermodel(
    formula: Formula,
    gen: ModelGenSpec,
    mode: str = "exhaustive",
) -> WeakProbModel | None:
    """First generated model (deterministic order) whose value for the sentence is < 1.

    Models on which a quantifier-equality precondition fails are skipped.
    """
    free = free_vars(formula)
    if free:
        from .errors import NotASentence

        raise NotASentence(free)
    if mode not in ("exhaustive", "random"):
        raise ValueError("mode must be 'exhaustive' or 'random'")
    if mode == "exhaustive" and (gen.size > 3 or len(gen.value_grid) > 5):
        raise SearchSpaceTooLarge(
            "exhaustive countermodel search is bounded by size <= 3 and grid <= 5")
    voc = infer_vocabulary(formula)
    models = exhaustive_models(gen, voc) if mode == "exhaustive" else random_models(gen, voc)
    for model in models:
        try:
            value = evaluate_closed(formula, model)
        except ContainmentViolated:
            continue
        if value < ONE:
            return model
    return None


# ---------------------------------------------------------------------------
# Abstract-logic closure properties


def _outcome(thunk):
    try:
        return ("value", thunk())
    except Exception as exc:  # noqa: BLE001 - the outcome class is the datum
        return ("error", type(exc).__name__)


def check_abstract_logic_properties(gen: ModelGenSpec, pool: Sequence[Formula]) -> Report:
    """Evaluation invariance under renaming, reducts and universe relabeling.

    Also checks structurally that well-formedness is monotone under
    vocabulary extension.
    """
    report = Report()
    voc = infer_vocabulary(pool)
    for m_index, model in enumerate(generate_models(gen, voc)):
        flipped = dict(zip(model.universe, reversed(model.universe)))
        relabeled = relabel_universe(model, flipped)

        symbol_map = {name: f"{name}_r" for name in sorted(voc.symbol_names())}
        renamed_model = rename(model, symbol_map)

        for sentence in pool:
            base = _outcome(lambda: evaluate_closed(sentence, model))

            report.tally()
            iso = _outcome(lambda: evaluate_closed(sentence, relabeled))
            if iso != base:
                report.add("isomorphism-variance", model=m_index,
                           sentence=print_formula(sentence), base=str(base), image=str(iso))

            report.tally()
            renamed_sentence = rename_symbols(sentence, symbol_map)
            ren = _outcome(lambda: evaluate_closed(renamed_sentence, renamed_model))
            if ren != base:
                report.add("renaming-variance", model=m_index,
                           sentence=print_formula(sentence), base=str(base), image=str(ren))

            report.tally()
            sentence_voc = infer_vocabulary(sentence)
            red = _outcome(lambda: evaluate_closed(sentence, reduct(model, sentence_voc)))
            if red != base:
                report.add("reduct-variance", model=m_index,
                           sentence=print_formula(sentence), base=str(base), image=str(red))

            report.tally()
            extended = sentence_voc.merged(
                Vocabulary(predicates=(("extra_wf_probe", 1),)))
            if not (_wf(sentence, sentence_voc) and _wf(sentence, extended)):
                report.add("sentence-monotonicity-failure", model=m_index,
                           sentence=print_formula(sentence))
    return report


def _wf(sentence: Formula, voc: Vocabulary) -> bool:
    try:
        check_formula(sentence, voc)
        return True
    except Exception:
        return False
