"""Check Hilbert-style proof scripts line by line.

Run with: python3 demos/proof_checking.py
"""

from intlogic import (
    AxiomInstance,
    IntegralIntro,
    IntegralMono,
    Premise,
    ProofLine,
    ProofScript,
    axiom_formula,
    check_proof,
    parse_formula,
    print_formula,
)
from intlogic.proofs import first_invalid_line

P = parse_formula("P(x)", None)
impl = parse_formula("P(x) -> Q(x)", None)

script = ProofScript((
    ProofLine(axiom_formula("mu2", phi=P, x="x"), AxiomInstance("mu2")),
    ProofLine(P, Premise()),
    ProofLine(parse_formula("INT P(x) dx", None), IntegralIntro(2, "x")),
    ProofLine(impl, Premise()),
    ProofLine(parse_formula("INT P(x) dx -> INT Q(x) dx", None), IntegralMono(4, "x")),
))

print("A five-line script:")
for number, line in enumerate(script.lines, start=1):
    just = type(line.justification).__name__
    print(f"  {number}. {print_formula(line.formula):55s} [{just}]")

report = check_proof(script)
print(f"\nverdict: {'VALID' if report.ok else 'INVALID'} ({report.checked} lines checked)")

# Corrupt line 3: claim the integral of the wrong formula.
broken_lines = list(script.lines)
broken_lines[2] = ProofLine(parse_formula("INT Q(x) dx", None), IntegralIntro(2, "x"))
broken = ProofScript(tuple(broken_lines))
report = check_proof(broken)
print(f"\nafter corrupting line 3: first invalid line = {first_invalid_line(report)}")
for violation in report.violations:
    print(f"  line {violation['line']}: {violation['reason']}")
