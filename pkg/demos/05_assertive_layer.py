"""From quantum truth to justified assertion.

An assertive formula asserts a quantum formula rather than stating it;
the unit of evaluation is justification, not truth.  The translation
from the quantum language maps negation to N, conjunction to K and the
derived join pattern to A, and a round trip through the preimage
recovers the quantum content.  Justification then tracks Q-truth
exactly, so the pragmatic layer preserves the semantics.
"""

from qlprop import (
    Assert,
    And,
    Atom,
    NotPDecidable,
    assertive_preimage,
    check_preservation,
    format_prag,
    format_tq,
    justified,
    m_qbit,
    parse_prag,
    parse_tq,
    q_truth,
    to_assertive,
)

m = m_qbit()

print("translation into the assertive language:")
for text in ("Ez+(x)", "~q Ez+(x)", "Ez+(x) & Ex+(x)", "Ez+(x) |q Ez-(x)"):
    f = parse_tq(text)
    af = to_assertive(f)
    back = assertive_preimage(af)
    print(f"  {text:18} -> {format_prag(af):32} -> {format_tq(back)}")
print()

# assertion signs attach to single properties only; richer content must
# come in through the connectives N, K, A
try:
    assertive_preimage(Assert(And(Atom("Ez+"), Atom("Ex+"))))
except NotPDecidable as e:
    print("direct assertion of a conjunction is refused:", e)
print()

af = parse_prag("|- Ez+(x)")
f = parse_tq("Ez+(x)")
print(f"justification of {format_prag(af)!r} against Q-truth of "
      f"{format_tq(f)!r}:")
for s in m.states:
    print(f"  {s:4}  {str(q_truth(m, s, f)):15} {justified(m, s, af)}")
print()

naf = parse_prag("N |- Ez+(x)")
print(f"{format_prag(naf)!r} is justified exactly where the quantum "
      f"negation is Q-true:")
for s in m.states:
    print(f"  {s:4}  {justified(m, s, naf)}")
print()

rep = check_preservation(m, 3)
print(f"preservation sweep over {rep.formulas} depth-3 formulas "
      f"({rep.classes} witness classes): "
      f"{len(rep.counterexamples)} counterexamples")
