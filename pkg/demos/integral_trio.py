"""Three roads to the same integral: expectation, dissections, layer cake.

The expectation form sum f(m)mu(m) is what the evaluator uses.  The
dissection form recomputes it as a supremum over every set partition of the
universe (a brute-force oracle), and the layer-cake form rebuilds it from
level sets.  On finite models all three agree exactly, in exact rationals.

Run with: python3 demos/integral_trio.py
"""

from fractions import Fraction as F

from intlogic import (
    FuzzySubset,
    WeakProbModel,
    integral_dirac,
    integral_dissection,
    integral_expectation,
    integral_layercake,
    level_set,
    set_partitions,
)
from intlogic.rational import DEFAULT_GRID
from intlogic.validate import grid_fuzzy_subsets, grid_measures

model = WeakProbModel(
    universe=("a", "b", "c"),
    measure={"a": F(1, 6), "b": F(1, 3), "c": F(1, 2)},
    predicates={}, functions={}, constants={},
)

f = FuzzySubset(("a", "b", "c"), {("a",): F(3, 4), ("b",): F(1, 4), ("c",): F(1, 2)})

print("f =", dict(f.values), "under mu =", dict(model.measure))
print()
print("  expectation :", integral_expectation(f, model))
print("  dissections :", integral_dissection(f, model),
      f"(sup over {len(set_partitions(3))} partitions of a 3-element universe)")
print("  layer cake  :", integral_layercake(f, model))
print()

print("Level sets behind the layer cake (strict thresholds):")
for alpha in (F(0), F(1, 4), F(1, 2), F(3, 4)):
    print(f"  {{x : f(x) > {alpha}}} =", sorted(level_set(f, alpha)))
print()

crisp = FuzzySubset(("a", "b", "c"), {("a",): F(1), ("b",): F(0), ("c",): F(1)})
print("For a crisp subset the integral is just the measure of its truth set:")
print("  expectation :", integral_expectation(crisp, model))
print("  Dirac form  :", integral_dirac(crisp, model))
print()

print("Exhaustive agreement over every grid-valued f and grid measure, |M| = 2:")
checked = 0
for measure in grid_measures(2, DEFAULT_GRID):
    two = WeakProbModel(("a", "b"), measure, {}, {}, {})
    for subset in grid_fuzzy_subsets(("a", "b"), DEFAULT_GRID):
        e = integral_expectation(subset, two)
        assert integral_dissection(subset, two) == e == integral_layercake(subset, two)
        checked += 1
print(f"  {checked} triples checked, zero mismatches")
