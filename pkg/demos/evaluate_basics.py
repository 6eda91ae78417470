"""A first tour: build a model, parse formulas, read off exact truth values.

Run with: python3 demos/evaluate_basics.py
"""

from fractions import Fraction as F

from intlogic import (
    WeakProbModel,
    evaluate_closed,
    hsat,
    parse_formula,
    print_formula,
)

# Three elements, each named by a constant, with a graded property Phi.
model = WeakProbModel(
    universe=("n1", "n2", "n3"),
    measure={"n1": F(1, 3), "n2": F(1, 3), "n3": F(1, 3)},
    predicates={"Phi": {("n1",): F(1, 2), ("n2",): F(4, 5), ("n3",): F(1)}},
    functions={},
    constants={"c1": "n1", "c2": "n2", "c3": "n3"},
)
voc = model.vocabulary()

print("The model interprets Phi with values 1/2, 4/5 and 1.")
print()

for text in [
    "Phi(c1)",
    "~Phi(c1)",                 # negation: 1 - x
    "Phi(c1) /\\ Phi(c2)",      # weak conjunction: min
    "Phi(c1) \\/ Phi(c2)",      # weak disjunction: max
    "Phi(c1) & Phi(c2)",        # strong conjunction: max(0, x+y-1)
    "Phi(c1) |+| Phi(c2)",      # strong disjunction: min(1, x+y)
    "Phi(c2) -> Phi(c1)",       # Lukasiewicz implication: min(1, 1-x+y)
    "ALL x. Phi(x)",            # min over the universe
    "EX x. Phi(x)",             # max over the universe
    "INT Phi(x) dx",            # expectation against the measure
]:
    formula = parse_formula(text, voc)
    value = evaluate_closed(formula, model)
    print(f"  {text:28s} = {value}")

print()
print("A sentence is H-satisfied exactly when its value is 1:")
for text in ["EX x. Phi(x)", "ALL x. Phi(x)"]:
    formula = parse_formula(text, voc)
    verdict = "H-SAT" if hsat(formula, model) else "NOT H-SAT"
    print(f"  {text:28s} -> {verdict}")

print()
print("Printing is the exact inverse of parsing:")
formula = parse_formula("INT Phi(x) /\\ rat(3/4) dx", voc)
print(f"  reprinted: {print_formula(formula)}")
print(f"  round-trips: {parse_formula(print_formula(formula), voc) == formula}")
