"""Hajek satisfiability, quantifier-equality clauses and approximation systems.

A sentence is H-satisfied when its truth value is exactly 1.  Equality
between two quantifier expressions is decided through level sets: for each
configured pair of thresholds, the right side's level set must be contained
in the left side's, and the summed measure of the differences must be
exactly zero (on finite rational models "smaller than every epsilon"
collapses to zero).  Crisp bodies are routed through the Dirac-case check,
where the level sets degenerate to truth sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    ContainmentViolated,
    FormatError,
    NotASentence,
    NotASubuniverse,
    NotCrisp,
    SentenceNotInSystem,
)
from .evaluate import evaluate_closed, value_matrix
from .model import (
    FuzzySubset,
    WeakProbModel,
    expand_by_constants,
    level_set,
    mu_set,
    truth_set,
)
from .rational import ONE, ZERO
from .reporting import Report
from .syntax import (
    Formula,
    Not,
    QuantEq,
    QuantExpr,
    check_formula,
    free_vars,
)


# ---------------------------------------------------------------------------
# Level configurations for quantifier equality


@dataclass(frozen=True)
class LevelConfig:
    """Thresholds in (0,1) and the index pairs (i, j) compared across them."""

    levels: tuple[Fraction, ...]
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        levels = tuple(Fraction(a) for a in self.levels)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs))
        for a in levels:
            if not ZERO < a < ONE:
                raise FormatError(f"levels must lie strictly inside (0,1), got {a}")
        if list(levels) != sorted(set(levels)):
            raise FormatError("levels must be strictly ascending")
        for i, j in self.pairs:
            if not (0 <= i < len(levels) and 0 <= j < len(levels)):
                raise FormatError(f"pair ({i},{j}) indexes outside the level list")

    @classmethod
    def diagonal(cls, levels: Iterable[Fraction]) -> "LevelConfig":
        levels = tuple(levels)
        return cls(levels, tuple((i, i) for i in range(len(levels))))


def default_level_config(f: FuzzySubset, g: FuzzySubset) -> LevelConfig:
    """Diagonal pairing over the interior values attained by either matrix."""
    attained = set(f.values.values()) | set(g.values.values())
    interior = sorted(a for a in attained if ZERO < a < ONE)
    return LevelConfig.diagonal(interior)


# ---------------------------------------------------------------------------
# Hajek satisfiability


def hsat(formula: Formula, model: WeakProbModel, cfg: LevelConfig | None = None) -> bool:
    """True when the sentence has truth value exactly 1 (level-set clause for '=')."""
    free = free_vars(formula)
    if free:
        raise NotASentence(free)
    if isinstance(formula, QuantEq):
        return hsat_qeq(formula.left, formula.right, model, cfg)
    return evaluate_closed(formula, model) == ONE


def hsat_qeq_dirac(f: FuzzySubset, g: FuzzySubset, model: WeakProbModel) -> bool:
    """Dirac case: both truth sets crisp, g's contained in f's, difference null."""
    if not f.is_crisp() or not g.is_crisp():
        raise NotCrisp("the Dirac-case check requires {0,1}-valued matrices")
    f_true = truth_set(f)
    g_true = truth_set(g)
    if not g_true <= f_true:
        raise ContainmentViolated(
            None, "the right truth set must be contained in the left truth set")
    return mu_set(model, f_true - g_true, 1) == ZERO


def _qeq_matrix(side: QuantExpr, model: WeakProbModel) -> FuzzySubset:
    extra = free_vars(side.body) - {side.var}
    if extra:
        raise NotASentence(extra)
    return value_matrix(side.body, side.var, model)


def hsat_qeq(
    left: QuantExpr,
    right: QuantExpr,
    model: WeakProbModel,
    cfg: LevelConfig | None = None,
) -> bool:
    """Level-set condition for 'Q phi(x) = Q psi(y)'.

    With no explicit config: crisp matrices go through the Dirac check,
    otherwise the diagonal pairing over the attained interior values is
    used.  Containment failures raise rather than answer False; they break
    the condition's preconditions.
    """
    f = _qeq_matrix(left, model)
    g = _qeq_matrix(right, model)
    if cfg is None:
        if f.is_crisp() and g.is_crisp():
            return hsat_qeq_dirac(f, g, model)
        cfg = default_level_config(f, g)
    total = ZERO
    for i, j in cfg.pairs:
        f_level = level_set(f, cfg.levels[i])
        g_level = level_set(g, cfg.levels[j])
        if not g_level <= f_level:
            raise ContainmentViolated(
                (i, j),
                f"level pair ({cfg.levels[i]}, {cfg.levels[j]}) violates containment",
            )
        total += mu_set(model, f_level - g_level, 1)
    return total == ZERO


# ---------------------------------------------------------------------------
# Approximation systems


@dataclass(frozen=True)
class ApproximationSystem:
    """A finite sentence pool with an approximation relation between indices."""

    sentences: tuple[Formula, ...]
    rel: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "rel", frozenset((int(i), int(j)) for i, j in self.rel))
        n = len(self.sentences)
        for i, j in self.rel:
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError(f"relation pair ({i},{j}) indexes outside the sentence pool")

    def index_of(self, sentence: Formula) -> int:
        for i, candidate in enumerate(self.sentences):
            if candidate == sentence:
                return i
        raise SentenceNotInSystem(f"sentence not in the pool: {sentence!r}")

    def approximations_of(self, index: int) -> list[int]:
        return sorted(j for i, j in self.rel if i == index)

    @classmethod
    def diagonal(cls, sentences: Sequence[Formula]) -> "ApproximationSystem":
        n = len(sentences)
        return cls(tuple(sentences), frozenset((i, i) for i in range(n)))


def validate_approximation_system(
    system: ApproximationSystem,
    models: Sequence[WeakProbModel],
) -> Report:
    """Check transitivity, vocabulary closure and satisfaction monotonicity.

    Vocabulary closure and monotonicity are model-relative and are checked
    against every supplied model; each violating pair or triple becomes a
    report entry.
    """
    report = Report()
    rel = system.rel

    for i, j in sorted(rel):
        for j2, k in sorted(rel):
            if j2 != j:
                continue
            report.tally()
            if (i, k) not in rel:
                report.add("not-transitive", chain=[i, j, k])

    for m_index, model in enumerate(models):
        voc = model.vocabulary()
        for i, j in sorted(rel):
            report.tally()
            if _well_formed_over(system.sentences[i], voc) and not _well_formed_over(system.sentences[j], voc):
                report.add("not-language-closed", model=m_index, pair=[i, j])

        for i, j in sorted(rel):
            report.tally()
            try:
                src = hsat(system.sentences[i], model)
                dst = hsat(system.sentences[j], model)
            except ContainmentViolated as exc:
                report.add("clause-error", model=m_index, pair=[i, j], error=str(exc))
                continue
            if src and not dst:
                report.add("not-monotone", model=m_index, pair=[i, j])
    return report


def _well_formed_over(sentence: Formula, voc) -> bool:
    try:
        check_formula(sentence, voc)
        return True
    except Exception:
        return False


def hasat(
    formula: Formula,
    model: WeakProbModel,
    system: ApproximationSystem,
    cfg: LevelConfig | None = None,
) -> bool:
    """Approximate satisfaction: every approximation of the sentence is H-satisfied."""
    index = system.index_of(formula)
    return all(
        hsat(system.sentences[j], model, cfg) for j in system.approximations_of(index)
    )


# ---------------------------------------------------------------------------
# Weak negation


@dataclass(frozen=True)
class WeakNegation:
    """A sentence-to-sentence negation map; the default is syntactic negation."""

    fn: Callable[[Formula], Formula] = Not

    def __call__(self, sentence: Formula) -> Formula:
        return self.fn(sentence)


def check_weak_negation(
    neg: WeakNegation,
    pool: Sequence[Formula],
    system: ApproximationSystem,
    models: Sequence[WeakProbModel],
) -> Report:
    """Check totality ("phi or weakly-not phi holds") and exclusion under approximation.

    Totality fails for syntactic negation at any intermediate truth value;
    the report distinguishes the two clauses so that expected failure
    patterns stay visible.
    """
    report = Report()
    for m_index, model in enumerate(models):
        for sentence in pool:
            negated = neg(sentence)
            report.tally()
            if not (hsat(sentence, model) or hsat(negated, model)):
                report.add(
                    "totality-violation",
                    model=m_index,
                    sentence=_name(sentence),
                )

            index = system.index_of(sentence)
            for j in system.approximations_of(index):
                approx_sentence = system.sentences[j]
                neg_approx = neg(approx_sentence)
                report.tally()
                try:
                    system.index_of(neg_approx)
                except SentenceNotInSystem:
                    report.add(
                        "negation-missing-from-pool",
                        model=m_index,
                        sentence=_name(approx_sentence),
                    )
                    continue
                if hasat(neg_approx, model, system) and hasat(sentence, model, system):
                    report.add(
                        "exclusion-violation",
                        model=m_index,
                        sentence=_name(sentence),
                        approximation=_name(approx_sentence),
                    )
    return report


def _name(sentence: Formula) -> str:
    from .parser import print_formula

    try:
        return print_formula(sentence)
    except Exception:
        return repr(sentence)


# ---------------------------------------------------------------------------
# Theories and elementary substructures at finite-pool scale


def theory_of(
    model: WeakProbModel,
    pool: Sequence[Formula],
    system: ApproximationSystem,
) -> set[Formula]:
    """The pool sentences the model approximately H-satisfies."""
    return {sentence for sentence in pool if hasat(sentence, model, system)}


def check_elementary_substructure(
    small: WeakProbModel,
    large: WeakProbModel,
    pool: Sequence[Formula],
    system: ApproximationSystem,
) -> bool:
    """Does `large` approximately satisfy the theory of `small` over the pool?

    Both models are expanded with constants naming every element of `small`
    first, so pool sentences may address those elements by name.
    """
    if not set(small.universe) <= set(large.universe):
        raise NotASubuniverse(
            "the first model's universe must be contained in the second's")
    small_exp = expand_by_constants(small, small.universe)
    large_exp = expand_by_constants(large, small.universe)
    theory = theory_of(small_exp, pool, system)
    return all(hasat(sentence, large_exp, system) for sentence in theory)
