"""Subspace arithmetic and the lattice of certainty regions.

Properties of a Hilbert-annotated model are closed subspaces; mapping
each property to the set of states whose ray it contains turns the
subspace order into a finite ortholattice over state sets.  That lattice
keeps the quantum signature: orthomodular and atomistic, but not
distributive.
"""

import numpy as np

from qlprop import (
    Subspace,
    certain_states,
    check_boolean,
    check_ortho_modular,
    closure_generate,
    contains,
    export_dot,
    hexagon,
    join,
    m_qbit,
    meet,
    ortho,
    state_lattice,
)

# plain subspace arithmetic in dimension 3
xy = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
yz = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
y = meet(xy, yz)
print("two planes in dim 3 meet in a subspace of rank", y.rank)
print("their join has rank", join(xy, yz).rank)
print("the meet's orthocomplement contains [1,0,0]:",
      contains(ortho(y), Subspace.ray([1, 0, 0], 3)))
print()

m = m_qbit()
print("certainty regions of the qubit properties:")
for e in m.properties:
    print(f"  {e}: {sorted(certain_states(m, e))}")
print()

lat = state_lattice(m)
print(f"state lattice: {lat.n} elements, "
      f"{int(lat.poset.cover_matrix().sum())} covering pairs")
rep = check_ortho_modular(lat)
for c in rep.checks:
    print(f"  {c.law}: {'pass' if c.passed else f'FAIL at {c.witness}'}")
print()

boolean = check_boolean(lat.poset)
c = boolean["distributive_meet_over_join"]
print(f"distributivity fails, witness {c.witness}")
print("(two orthogonal rays join to the whole space, which any third")
print(" ray meets nontrivially, while it meets each summand in zero)")
print()

# the hexagon is an ortholattice that is not orthomodular; the checker
# separates the two notions
bad = check_ortho_modular(hexagon())
print("hexagon comparison:",
      ", ".join(f"{c.law}={c.passed}" for c in bad.checks))
print()

# closure generation: three orthogonal rays plus an oblique one
rt2 = 1 / np.sqrt(2)
gens = [Subspace.ray([1, 0, 0], 3), Subspace.ray([0, 1, 0], 3),
        Subspace.ray([0, 0, 1], 3), Subspace.ray([rt2, rt2, 0], 3)]
closed = closure_generate(3, gens, cap=32)
by_rank = sorted(s.rank for s in closed)
print(f"closure of 4 generating rays: {len(closed)} subspaces, "
      f"ranks {by_rank}")
print()

print("DOT export of the qubit lattice (first lines):")
for line in export_dot(lat.poset).splitlines()[:6]:
    print(" ", line)
