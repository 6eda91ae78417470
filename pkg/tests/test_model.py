import json
from fractions import Fraction

import pytest

import intlogic as il
from intlogic import errors
from intlogic.model import (
    Dissection,
    FuzzySubset,
    WeakProbModel,
    expand_by_constants,
    isomorphic,
    level_set,
    model_from_json,
    model_to_json,
    mu_set,
    reduct,
    relabel_universe,
    rename,
)

HALF = Fraction(1, 2)


def uniform2(p_a=Fraction(1), p_b=Fraction(0)):
    return WeakProbModel(
        ("a", "b"),
        {"a": HALF, "b": HALF},
        {"P": {("a",): p_a, ("b",): p_b}},
        {},
        {"c": "a"},
    )


MODEL_DOC = {
    "universe": ["a", "b"],
    "measure": {"a": "1/2", "b": "1/2"},
    "predicates": {"P": {"arity": 1, "table": {"a": "1", "b": "0"}}},
    "functions": {"swap": {"arity": 1, "table": {"a": "b", "b": "a"}}},
    "constants": {"c": "a"},
}


class TestLoading:
    def test_valid_model(self, tmp_path):
        from intlogic.files import load_model

        path = tmp_path / "m.json"
        path.write_text(json.dumps(MODEL_DOC))
        model = load_model(path)
        assert sum(model.measure.values()) == 1

    def test_unnormalized_measure(self):
        doc = dict(MODEL_DOC, measure={"a": "1/3", "b": "1/3"})
        with pytest.raises(errors.MeasureNotNormalized):
            model_from_json(doc)

    def test_value_out_of_range(self):
        doc = dict(MODEL_DOC, predicates={"P": {"arity": 1, "table": {"a": "3/2", "b": "0"}}})
        with pytest.raises(errors.ValueOutOfRange):
            model_from_json(doc)

    def test_incomplete_table(self):
        doc = dict(MODEL_DOC, predicates={"P": {"arity": 1, "table": {"a": "1"}}})
        with pytest.raises(errors.TableIncomplete):
            model_from_json(doc)

    def test_function_outside_universe(self):
        doc = dict(MODEL_DOC, functions={"swap": {"arity": 1, "table": {"a": "zz", "b": "a"}}})
        with pytest.raises(errors.FormatError):
            model_from_json(doc)

    def test_json_round_trip(self):
        model = model_from_json(MODEL_DOC)
        assert model_from_json(model_to_json(model)) == model


class TestMuSet:
    def test_singleton(self):
        assert mu_set(uniform2(), {"a"}) == HALF

    def test_product_measure_pairs(self):
        # mu{(a,a),(a,b)} = 1/4 + 1/4 by the product formula
        assert mu_set(uniform2(), {("a", "a"), ("a", "b")}, k=2) == HALF

    def test_empty(self):
        assert mu_set(uniform2(), set()) == 0

    def test_finitely_additive_and_monotone(self):
        model = WeakProbModel(
            ("a", "b", "c"),
            {"a": Fraction(1, 6), "b": Fraction(1, 3), "c": HALF},
            {}, {}, {},
        )
        parts = [{"a"}, {"b"}, {"c"}]
        whole = {"a", "b", "c"}
        assert sum(mu_set(model, p) for p in parts) == mu_set(model, whole) == 1
        assert mu_set(model, {"a"}) <= mu_set(model, {"a", "b"})

    def test_arity_checked(self):
        with pytest.raises(errors.FormatError):
            mu_set(uniform2(), {("a", "b")}, k=1)


class TestFuzzySubset:
    def test_totality_enforced(self):
        with pytest.raises(errors.TableIncomplete):
            FuzzySubset(("a", "b"), {("a",): HALF})

    def test_constant_and_crisp(self):
        const = FuzzySubset.constant(("a", "b"), HALF)
        assert not const.is_crisp()
        crisp = FuzzySubset(("a", "b"), {("a",): Fraction(1), ("b",): Fraction(0)})
        assert crisp.is_crisp()

    def test_level_set_is_strict(self):
        f = FuzzySubset(("a", "b"), {("a",): HALF, ("b",): Fraction(1)})
        assert level_set(f, HALF) == {"b"}
        assert level_set(f, Fraction(0)) == {"a", "b"}
        assert level_set(f, Fraction(1)) == frozenset()


class TestDissection:
    def test_partition_checked(self):
        Dissection((frozenset({"a"}), frozenset({"b"})))
        with pytest.raises(errors.FormatError):
            Dissection((frozenset({"a"}), frozenset({"a", "b"})))
        with pytest.raises(errors.FormatError):
            Dissection((frozenset(),))

    def test_covers(self):
        d = Dissection((frozenset({"a"}), frozenset({"b"})))
        assert d.covers(("a", "b"))
        assert not d.covers(("a", "b", "c"))


class TestStructureOps:
    def test_reduct_drops_symbols(self):
        model = model_from_json(MODEL_DOC)
        small = reduct(model, il.Vocabulary(predicates=(("P", 1),)))
        assert "swap" not in small.functions
        assert small.constants == {}

    def test_reduct_missing_symbol(self):
        model = model_from_json(MODEL_DOC)
        with pytest.raises(errors.NotSubvocabulary):
            reduct(model, il.Vocabulary(predicates=(("Zap", 1),)))

    def test_rename_bijection(self):
        model = model_from_json(MODEL_DOC)
        renamed = rename(model, {"P": "Q", "swap": "rot", "c": "k"})
        assert set(renamed.predicates) == {"Q"}
        assert set(renamed.functions) == {"rot"}
        assert renamed.constants == {"k": "a"}

    def test_rename_collision_rejected(self):
        model = WeakProbModel(("a",), {"a": Fraction(1)},
                              {"P": {("a",): Fraction(1)}, "Q": {("a",): Fraction(0)}}, {}, {})
        with pytest.raises(errors.FormatError):
            rename(model, {"P": "Q"})

    def test_isomorphic_to_itself(self):
        model = model_from_json(MODEL_DOC)
        assert isomorphic(model, model)

    def test_isomorphic_under_relabeling(self):
        model = model_from_json(MODEL_DOC)
        relabeled = relabel_universe(model, {"a": "x2", "b": "x1"})
        assert isomorphic(model, relabeled)

    def test_not_isomorphic_when_values_differ(self):
        left = uniform2(Fraction(1), Fraction(0))
        right = uniform2(HALF, HALF)
        assert not isomorphic(left, right)

    def test_isomorphic_distinguishes_measure(self):
        left = WeakProbModel(("a", "b"), {"a": Fraction(1, 4), "b": Fraction(3, 4)},
                             {"P": {("a",): Fraction(1), ("b",): Fraction(1)}}, {}, {})
        right = WeakProbModel(("a", "b"), {"a": Fraction(1, 3), "b": Fraction(2, 3)},
                              {"P": {("a",): Fraction(1), ("b",): Fraction(1)}}, {}, {})
        assert not isomorphic(left, right)

    def test_universe_cap(self):
        names = tuple(f"e{i}" for i in range(9))
        weights = {n: Fraction(1, 9) for n in names}
        model = WeakProbModel(names, weights, {}, {}, {})
        with pytest.raises(errors.UniverseTooLarge):
            isomorphic(model, model)

    def test_expand_by_constants(self):
        model = uniform2()
        expanded = expand_by_constants(model)
        assert expanded.constants["a"] == "a" and expanded.constants["b"] == "b"
        # idempotent on the same names
        assert expand_by_constants(expanded).constants == expanded.constants
