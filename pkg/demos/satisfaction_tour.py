"""H-satisfaction, approximation systems, and equality between quantifiers.

Run with: python3 demos/satisfaction_tour.py
"""

from fractions import Fraction as F

from intlogic import (
    ApproximationSystem,
    LevelConfig,
    WeakProbModel,
    hasat,
    hsat,
    hsat_qeq,
    parse_formula,
    print_formula,
    validate_approximation_system,
)
from intlogic.syntax import QuantEq

model = WeakProbModel(
    universe=("a", "b"),
    measure={"a": F(1), "b": F(0)},   # b carries no mass
    predicates={
        "P": {("a",): F(3, 4), ("b",): F(1, 4)},
        "Q": {("a",): F(3, 4), ("b",): F(0)},
        "S": {("a",): F(9, 10), ("b",): F(9, 10)},
        "T": {("a",): F(1), ("b",): F(1)},
    },
    functions={},
    constants={"c": "a"},
)
voc = model.vocabulary()

print("S(c) has value 9/10 and T(c) has value 1:")
for text in ["S(c) \\/ T(c)", "S(c) & T(c)", "S(c) /\\ T(c)"]:
    verdict = "H-SAT" if hsat(parse_formula(text, voc), model) else "NOT H-SAT"
    print(f"  {text:18s} -> {verdict}")
print()

print("Quantifier equality compares level sets; mass-0 differences are invisible:")
equality = parse_formula("INT P(x) dx = INT Q(y) dy", voc)
assert isinstance(equality, QuantEq)
cfg = LevelConfig(levels=(F(1, 8),), pairs=((0, 0),))
print(f"  {print_formula(equality)}")
print(f"  at level 1/8 the sets differ only in b, and mu(b) = 0:",
      hsat_qeq(equality.left, equality.right, model, cfg))

heavy_b = WeakProbModel(model.universe, {"a": F(1, 2), "b": F(1, 2)},
                        model.predicates, model.functions, model.constants)
print(f"  same sets with mu(b) = 1/2:",
      hsat_qeq(equality.left, equality.right, heavy_b, cfg))
print()

print("Approximation systems: a sentence approximated by its weakenings.")
sentences = tuple(parse_formula(t, voc) for t in ["S(c)", "S(c) \\/ T(c)"])
system = ApproximationSystem(sentences, frozenset({(0, 1)}))
report = validate_approximation_system(system, [model])
print(f"  validator: {len(report.violations)} violations in {report.checked} checks")
print(f"  hsat(S(c))          = {hsat(sentences[0], model)}")
print(f"  hasat(S(c))         = {hasat(sentences[0], model, system)}"
      "   (its only approximation, the disjunction, is satisfied)")
