"""The quantum connectives and three-valued truth on the qubit fixture.

Quantum negation and conjunction act through the subspace operations,
so every formula reduces to one declared property (its witness).  Truth
at a state is then trichotomous: certain, certainly false, or
indeterminate, with the middle region exactly the rays oblique to the
witness subspace.
"""

from qlprop import (
    QTruth,
    check_tq_equalities,
    format_tq,
    m_qbit,
    parse_lx,
    parse_tq,
    q_truth,
    q_truth_classical,
    sasaki_hook,
    tq_physical_proposition,
    witness_property,
)

m = m_qbit()

# the derived connectives are expanded while parsing
f = parse_tq("Ez+(x) |q Ez-(x)")
print("Ez+(x) |q Ez-(x)  parses to  ", format_tq(f))
print()

print("witness properties (the declared property each formula reduces to):")
for text in ("Ez+(x)", "~q Ez+(x)", "Ez+(x) & Ex+(x)", "Ez+(x) |q Ez-(x)"):
    g = parse_tq(text)
    w = witness_property(m, g)
    print(f"  {text:20} -> {w:4}  proposition "
          f"{sorted(tq_physical_proposition(m, g))}")
print()

res = check_tq_equalities(m, 3)
print(f"connective/lattice agreement over {res['formulas']} depth-3 "
      f"formulas ({res['classes']} witness classes):")
print(f"  negation violations:    {len(res['negation'])}")
print(f"  conjunction violations: {len(res['conjunction'])}")
print(f"  join violations:        {len(res['join'])}")
a, b = res["join_strict_witness"]
print(f"  join strictly above the union at ({a}, {b})")
print()

g, prop = sasaki_hook(m, parse_tq("Ex+(x)"), parse_tq("Ez+(x)"))
print("Sasaki arrow Ex+ -> Ez+ expands to", format_tq(g))
print("its proposition:", sorted(prop))
print()

print("three-valued truth of the atoms at every state (T / F / ?):")
code = {QTruth.TRUE: "T", QTruth.FALSE: "F", QTruth.INDETERMINATE: "?"}
print("        " + "".join(f"{e:>5}" for e in m.properties))
for s in m.states:
    row = "".join(f"{code[q_truth(m, s, parse_tq(e + '(x)'))]:>5}"
                  for e in m.properties)
    print(f"  {s:4}  {row}")
print()

print("the oblique pair: q_truth(Sx+, Ez+(x)) =",
      q_truth(m, "Sx+", parse_tq("Ez+(x)")))
print()

# classical formulas reach the same trichotomy through their witness,
# when they have one
cf = parse_lx("Ez+(x) & EI(x)")
print(f"classical {format_tq(parse_tq('Ez+(x) & EI(x)'))!r} at Sz+:",
      q_truth_classical(m, "Sz+", cf))
untestable = parse_lx("Ez+(x) | Ez-(x)")
print("classical 'Ez+(x) | Ez-(x)' has no witness:",
      q_truth_classical(m, "Sz+", untestable))
assert q_truth(m, "Sx+", parse_tq("Ez+(x)")) is QTruth.INDETERMINATE
