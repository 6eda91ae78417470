import random
from fractions import Fraction

import pytest

import intlogic as il
from intlogic import errors
from intlogic.model import model_from_json
from intlogic.syntax import Atom, Constant, Implies, Integral, Not, Or, Variable, Vocabulary
from intlogic.validate import (
    ModelGenSpec,
    check_abstract_logic_properties,
    exhaustive_models,
    find_countermodel,
    grid_fuzzy_subsets,
    grid_measures,
    integral_law_suite,
    mu3_equality_gap,
    random_models,
    universe_names,
    validate_axiom,
)

F = Fraction
HALF = F(1, 2)
P_c = Atom("P", (Constant("c"),))


class TestModelGeneration:
    def test_grid_measures_normalized_and_distinct(self):
        measures = grid_measures(2, (F(0), F(1, 4), HALF, F(3, 4), F(1)))
        assert len(measures) == len({tuple(m.values()) for m in measures})
        for measure in measures:
            assert sum(measure.values()) == 1

    def test_grid_measures_known_count_size2(self):
        # normalized pairs from {0..4}/4 with gcd-reduced ratios: 13 of them
        measures = grid_measures(2, (F(0), F(1, 4), HALF, F(3, 4), F(1)))
        assert len(measures) == 13

    def test_exhaustive_counts(self):
        gen = ModelGenSpec(size=2, exhaustive=True)
        voc = Vocabulary(predicates=(("P", 1),))
        models = list(exhaustive_models(gen, voc))
        assert len(models) == 13 * 5 ** 2

    def test_exhaustive_cap(self):
        gen = ModelGenSpec(size=3, exhaustive=True)
        voc = Vocabulary(predicates=(("P", 2), ("Q", 2), ("R", 2)))
        with pytest.raises(errors.SearchSpaceTooLarge):
            list(exhaustive_models(gen, voc))

    def test_random_models_deterministic(self):
        gen = ModelGenSpec(size=2, seed=42, count=10)
        voc = Vocabulary(predicates=(("P", 1),), functions=(("f", 1),), constants=("c",))
        first = list(random_models(gen, voc))
        second = list(random_models(gen, voc))
        assert first == second

    def test_random_models_validity(self):
        gen = ModelGenSpec(size=3, seed=7, count=20)
        voc = Vocabulary(predicates=(("P", 1),), has_approx=True)
        for model in random_models(gen, voc):
            assert sum(model.measure.values()) == 1
            assert "approx" in model.predicates

    def test_universe_names(self):
        assert universe_names(3) == ("a", "b", "c")
        assert universe_names(27)[-1] == "e27"


class TestValidateAxioms:
    def test_mu1_constant_body(self):
        gen = ModelGenSpec(size=2, exhaustive=True)
        report = validate_axiom("mu1", gen)
        assert report.ok

    def test_mu2_exhaustive_size2(self):
        report = validate_axiom("mu2", ModelGenSpec(size=2, exhaustive=True))
        assert report.ok and report.checked > 0

    def test_mu5_fubini_exhaustive_size2(self):
        report = validate_axiom("mu5", ModelGenSpec(size=2, exhaustive=True))
        assert report.ok

    def test_mu3_implication_direction(self):
        report = validate_axiom("mu3", ModelGenSpec(size=2, exhaustive=True))
        assert report.ok

    def test_mu3_equality_reading_fails_somewhere(self):
        witness = mu3_equality_gap(ModelGenSpec(size=2, exhaustive=True))
        assert witness is not None
        assert witness["lhs"] != witness["rhs"]
        # the witness replays: rebuild the model and re-evaluate both sides
        model = model_from_json(witness["model"])
        assert model is not None

    def test_random_mode_also_clean(self):
        report = validate_axiom("mu4", ModelGenSpec(size=3, seed=5, count=40))
        assert report.ok

    def test_violation_record_shape(self):
        # force a fake violation by validating mu3 as equality via the gap prober
        witness = mu3_equality_gap(ModelGenSpec(size=2, exhaustive=True))
        assert {"axiom", "model", "instantiation", "valuation", "lhs", "rhs"} <= set(witness)


class TestFindCountermodel:
    def test_excluded_middle_fails(self):
        formula = Or(P_c, Not(P_c))
        model = find_countermodel(formula, ModelGenSpec(size=1, exhaustive=True))
        assert model is not None
        assert il.evaluate_closed(formula, model) < 1

    def test_constant_one_has_no_countermodel(self):
        formula = il.TruthConst(F(1))
        assert find_countermodel(formula, ModelGenSpec(size=1, exhaustive=True)) is None

    def test_reflexive_implication_under_integral(self):
        P_x = Atom("P", (Variable("x"),))
        formula = Integral("x", Implies(P_x, P_x))
        assert find_countermodel(formula, ModelGenSpec(size=2, exhaustive=True)) is None

    def test_exhaustive_bounds(self):
        with pytest.raises(errors.SearchSpaceTooLarge):
            find_countermodel(P_c, ModelGenSpec(size=4, exhaustive=True))

    def test_random_mode(self):
        formula = Or(P_c, Not(P_c))
        model = find_countermodel(formula, ModelGenSpec(size=2, seed=3, count=50), mode="random")
        assert model is not None

    def test_requires_sentence(self):
        with pytest.raises(errors.NotASentence):
            find_countermodel(Atom("P", (Variable("x"),)), ModelGenSpec(size=1))


class TestClosureProperties:
    def test_clean_on_random_pool(self):
        rng = random.Random(19)
        import gen as testgen

        pool = [testgen.random_sentence(rng, depth=3) for _ in range(5)]
        report = check_abstract_logic_properties(ModelGenSpec(size=2, seed=8, count=20), pool)
        assert report.ok
        assert report.checked == 20 * len(pool) * 4

    def test_quantifier_equality_outcomes_transport(self):
        pool = [il.parse_formula("INT P(x) dx = INT P(y) dy",
                                 Vocabulary(predicates=(("P", 1),)))]
        report = check_abstract_logic_properties(ModelGenSpec(size=2, seed=8, count=10), pool)
        assert report.ok


class TestIntegralLawSuite:
    def test_exhaustive_on_two_elements(self):
        model = il.WeakProbModel(("a", "b"), {"a": HALF, "b": HALF},
                                 {"P": {("a",): F(1), ("b",): F(0)}}, {}, {})
        report = integral_law_suite(model, ModelGenSpec(size=2, exhaustive=True))
        assert report.ok
        assert report.checked == 5 + 3 * 625 + 625

    def test_random_sampling(self):
        model = il.WeakProbModel(("a", "b", "c"),
                                 {"a": F(1, 3), "b": F(1, 3), "c": F(1, 3)}, {}, {}, {})
        report = integral_law_suite(model, ModelGenSpec(size=3, seed=4, count=50))
        assert report.ok

    def test_exhaustive_guard(self):
        names = universe_names(8)
        model = il.WeakProbModel(names, {n: F(1, 8) for n in names}, {}, {}, {})
        with pytest.raises(errors.SearchSpaceTooLarge):
            integral_law_suite(model, ModelGenSpec(size=8, exhaustive=True))


def test_grid_fuzzy_subset_count():
    subsets = list(grid_fuzzy_subsets(("a", "b"), (F(0), HALF, F(1))))
    assert len(subsets) == 9
    assert len(list(grid_fuzzy_subsets(("a",), (F(0), F(1)), arity=2))) == 2
