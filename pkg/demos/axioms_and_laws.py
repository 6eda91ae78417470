"""Validate the integral axioms and the five semantic laws over model grids.

mu1, mu2, mu4 and mu5 hold as exact equalities under the expectation
semantics; mu3 only holds in the implication direction, and this script
surfaces a concrete witness of the gap rather than hiding it.

Run with: python3 demos/axioms_and_laws.py
"""

import json

from intlogic import ModelGenSpec, WeakProbModel, validate_axiom
from intlogic.rational import DEFAULT_GRID
from intlogic.validate import grid_measures, integral_law_suite, mu3_equality_gap, universe_names

gen_spec = ModelGenSpec(size=2, exhaustive=True)

print("Axiom schemata over every grid model with |M| = 2:")
for axiom in ("mu1", "mu2", "mu3", "mu4", "mu5"):
    report = validate_axiom(axiom, gen_spec)
    direction = "as an implication" if axiom == "mu3" else "as an equality"
    print(f"  {axiom}: {len(report.violations)} violations in {report.checked} checks ({direction})")
print()

print("Reading mu3 as an equality fails; one replayable witness:")
witness = mu3_equality_gap(gen_spec)
print(f"  instantiation: {witness['instantiation']}")
print(f"  lhs = {witness['lhs']}, rhs = {witness['rhs']}")
print(f"  model: {json.dumps(witness['model'])}")
print()

print("The five semantic laws on one model, exhaustively over grid samples:")
names = universe_names(2)
measure = grid_measures(2, DEFAULT_GRID)[2]
model = WeakProbModel(names, measure, {}, {}, {})
report = integral_law_suite(model, gen_spec)
print(f"  mu = {dict(measure)}: {len(report.violations)} violations in {report.checked} checks")
