"""Classical language walkthrough on the two-state fixture.

Shows parsing, per-state extensions, truth relative to an
interpretation, and the two entailment orders: the logical one
(quantifying over interpretations) and the strictly weaker physical one
(comparing certainty regions).
"""

from qlprop import (
    Atom,
    Not,
    Or,
    enumerate_interpretations,
    extension_of,
    forall_proposition,
    format_lx,
    individual_proposition,
    is_true,
    logical_leq,
    m_sr,
    parse_lx,
    physical_leq,
    physical_proposition,
)

m = m_sr()
print("states:    ", ", ".join(m.states))
for s in m.states:
    print(f"universe of {s}:", ", ".join(m.universes[s]))
print("properties:", ", ".join(m.properties))
print()

f = parse_lx("E(x) & !F(x)")
print("parsed:", format_lx(f))
print()

print("extensions of E:")
for s in m.states:
    print(f"  {s}: {sorted(extension_of(m, s, Atom('E')))}")
print()

print("truth of", format_lx(f), "per interpretation and state:")
for interp in enumerate_interpretations(m):
    row = {s: is_true(m, interp, s, f) for s in m.states}
    print(f"  x := {interp}  ->  {row}")
print()

# the individual proposition depends on the interpretation; the
# physical proposition is its intersection over all of them
for interp in enumerate_interpretations(m):
    p = individual_proposition(m, interp, f)
    print(f"individual proposition under {interp}: {sorted(p)}")
print("physical proposition:", sorted(physical_proposition(m, f)))
print("via universal quantifier:", sorted(forall_proposition(m, f)))
print()

a, b = Atom("F"), Atom("E")
print(f"physical_leq(F, E) = {physical_leq(m, a, b)}   "
      f"(certainty region of F is empty)")
print(f"logical_leq(F, E)  = {logical_leq(m, a, b)}   "
      f"(x := u2 makes F true and E false in S1)")
print()

neg = physical_proposition(m, Not(Atom("E")))
comp = frozenset(m.states) - physical_proposition(m, Atom("E"))
print("negation proposition", sorted(neg), "is strictly below the")
print("complement of the affirmation's proposition", sorted(comp))
disj = physical_proposition(m, Or(Atom("E"), Atom("F")))
union = (physical_proposition(m, Atom("E"))
         | physical_proposition(m, Atom("F")))
print("disjunction proposition", sorted(disj),
      "strictly exceeds the union", sorted(union))
