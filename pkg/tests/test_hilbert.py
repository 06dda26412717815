"""Subspace geometry tests.

The oracle route works on projector matrices: eigenvectors of
P_a + P_b with eigenvalue near 2 span the intersection, those with
nonzero eigenvalue span the joint range.  The implementation under
test works on orthonormal basis rows instead, so agreement is
meaningful.
"""

import random

import numpy as np
import pytest

from qlprop.errors import (
    ClosureCapExceeded,
    DimensionMismatch,
    NoHilbertAnnotation,
    NonOrthonormalBasis,
    NotOperationClosed,
    RankError,
    UnknownProperty,
)
from qlprop.hilbert import (
    Subspace,
    certain_states,
    closure_generate,
    contains,
    join,
    meet,
    ortho,
    state_lattice,
)
from qlprop.model import m_qbit, m_qutrit, m_sr, make_model, HilbertAnnotation

from helpers import projector_join, projector_meet, random_unit

# ---------------------------------------------------------------------------
# oracle self-checks on cases solvable by hand


def test_projector_oracle_plane_meet_in_r3():
    # span{e1,e2} meet span{e2,e3} = span{e2}
    pa = np.diag([1.0, 1.0, 0.0]).astype(complex)
    pb = np.diag([0.0, 1.0, 1.0]).astype(complex)
    assert np.allclose(projector_meet(pa, pb), np.diag([0, 1, 0]))
    assert np.allclose(projector_join(pa, pb), np.eye(3))


def test_projector_oracle_disjoint_rays():
    pa = np.diag([1.0, 0.0]).astype(complex)
    pb = np.diag([0.0, 1.0]).astype(complex)
    assert np.allclose(projector_meet(pa, pb), np.zeros((2, 2)))
    assert np.allclose(projector_join(pa, pb), np.eye(2))


# ---------------------------------------------------------------------------
# construction and validation


def test_span_drops_dependent_vectors():
    s = Subspace.span([[1, 0, 0], [2, 0, 0], [0, 1, 0]], dim=3)
    assert s.rank == 2


def test_span_near_duplicate_collapses():
    v = np.array([1.0, 0.0])
    w = v + 1e-12 * np.array([0.0, 1.0])
    assert Subspace.span([v, w], dim=2).rank == 1


def test_ray_of_zero_vector_rejected():
    with pytest.raises(RankError):
        Subspace.ray([0.0, 0.0])


def test_direct_constructor_validates_orthonormality():
    with pytest.raises(NonOrthonormalBasis):
        Subspace(2, np.array([[1.0, 1.0]], dtype=complex))
    with pytest.raises(NonOrthonormalBasis):
        Subspace(2, np.array([[1.0, 0.0], [1.0, 0.0]], dtype=complex))


def test_dim_mismatch():
    a = Subspace.ray([1, 0])
    b = Subspace.ray([1, 0, 0])
    with pytest.raises(DimensionMismatch):
        join(a, b)


def test_zero_and_full():
    z = Subspace.zero(3)
    f = Subspace.full(3)
    assert z.rank == 0 and f.rank == 3
    assert contains(f, z) and not contains(z, f)
    assert ortho(z) == f and ortho(f) == z


# ---------------------------------------------------------------------------
# frozen complex fixture


def test_complex_ray_orthocomplement():
    s = Subspace.ray([1, 1j])
    t = ortho(s)
    assert t == Subspace.ray([1j, 1])
    assert abs(np.vdot(s.basis[0], t.basis[0])) < 1e-12


def test_projection_values():
    s = Subspace.ray([1, 1j])  # normalized internally
    v = np.array([1.0, 0.0], dtype=complex)
    p = s.project(v)
    # <(1,i)/sqrt2, (1,0)> = 1/sqrt2, so the projection has norm 1/sqrt2
    assert abs(np.linalg.norm(p) - 1 / np.sqrt(2)) < 1e-12
    assert np.allclose(s.project(p), p)


def test_projector_matrix_is_hermitian_idempotent():
    s = Subspace.span([[1, 1j, 0], [0, 1, 1]], dim=3)
    p = s.projector()
    assert np.allclose(p, p.conj().T)
    assert np.allclose(p @ p, p)
    assert abs(np.trace(p).real - s.rank) < 1e-9


# ---------------------------------------------------------------------------
# meet/join against the projector oracle (the dual route)


def test_meet_join_match_projector_oracle_randomized():
    rng = random.Random(23)
    for trial in range(200):
        dim = rng.randint(1, 5)
        a = Subspace.span([random_unit(rng, dim)
                           for _ in range(rng.randint(0, dim))], dim)
        b = Subspace.span([random_unit(rng, dim)
                           for _ in range(rng.randint(0, dim))], dim)
        ja = join(a, b).projector()
        jo = projector_join(a.projector(), b.projector())
        assert np.max(np.abs(ja - jo)) < 1e-8, trial
        ma = meet(a, b).projector()
        mo = projector_meet(a.projector(), b.projector())
        assert np.max(np.abs(ma - mo)) < 1e-8, trial


def test_meet_of_overlapping_planes():
    a = Subspace.span([[1, 0, 0], [0, 1, 0]], dim=3)
    b = Subspace.span([[0, 1, 0], [0, 0, 1]], dim=3)
    assert meet(a, b) == Subspace.ray([0, 1, 0], dim=3)
    assert join(a, b) == Subspace.full(3)


def test_meet_of_skew_rays_is_zero():
    a = Subspace.ray([1, 1])
    b = Subspace.ray([1, -1])
    assert meet(a, b).rank == 0


# ---------------------------------------------------------------------------
# algebraic laws


def test_lattice_laws_randomized():
    rng = random.Random(5)
    for _ in range(100):
        dim = rng.randint(1, 4)
        a = Subspace.span([random_unit(rng, dim)
                           for _ in range(rng.randint(0, dim))], dim)
        b = Subspace.span([random_unit(rng, dim)
                           for _ in range(rng.randint(0, dim))], dim)
        assert ortho(ortho(a)) == a
        assert a.rank + ortho(a).rank == dim
        assert contains(join(a, b), a) and contains(join(a, b), b)
        assert contains(a, meet(a, b)) and contains(b, meet(a, b))
        assert join(a, b) == join(b, a)
        assert meet(a, b) == meet(b, a)
        # absorption
        assert join(a, meet(a, b)) == a
        assert meet(a, join(a, b)) == a
        # De Morgan against the oracle route
        assert ortho(join(a, b)) == meet(ortho(a), ortho(b))


def test_containment_is_a_partial_order():
    a = Subspace.span([[1, 0, 0]], dim=3)
    b = Subspace.span([[1, 0, 0], [0, 1, 0]], dim=3)
    assert contains(b, a)
    assert not contains(a, b)
    assert contains(a, a)
    # antisymmetry via __eq__
    c = Subspace.span([[2, 0, 0], [0, 3, 0]], dim=3)
    assert contains(b, c) and contains(c, b) and b == c


# ---------------------------------------------------------------------------
# model-level maps


def test_certain_states_qbit_frozen():
    m = m_qbit()
    assert certain_states(m, "E0") == frozenset()
    assert certain_states(m, "Ez+") == frozenset({"Sz+"})
    assert certain_states(m, "Ez-") == frozenset({"Sz-"})
    assert certain_states(m, "Ex+") == frozenset({"Sx+"})
    assert certain_states(m, "Ex-") == frozenset({"Sx-"})
    assert certain_states(m, "EI") == frozenset(m.states)


def test_certain_states_errors():
    with pytest.raises(NoHilbertAnnotation):
        certain_states(m_sr(), "E")
    with pytest.raises(UnknownProperty):
        certain_states(m_qbit(), "nope")


def test_state_lattice_qbit_shape():
    lat = state_lattice(m_qbit())
    assert lat.poset.n == 6
    assert len(lat.poset.covers()) == 8
    # bottom is the empty set, top is all four states
    assert lat.poset.elements[lat.bottom] == frozenset()
    assert lat.poset.elements[lat.top] == frozenset(m_qbit().states)


def test_state_lattice_meet_is_intersection():
    lat = state_lattice(m_qbit())
    els = lat.poset.elements
    for i in range(lat.poset.n):
        for j in range(lat.poset.n):
            k = lat.meet[i][j]
            assert els[k] == els[i] & els[j]


def test_state_lattice_join_exceeds_union_somewhere():
    lat = state_lattice(m_qbit())
    els = lat.poset.elements
    strict = [(i, j) for i in range(lat.poset.n) for j in range(lat.poset.n)
              if els[lat.join[i][j]] > (els[i] | els[j])]
    assert strict, "expected at least one strictly-larger join"


def test_state_lattice_requires_closure():
    # two non-orthogonal rays with no meet/ortho properties present
    ann = HilbertAnnotation(
        dim=2,
        state_rays={"S1": Subspace.ray([1, 0]), "S2": Subspace.ray([1, 1])},
        property_subspaces={"P": Subspace.ray([1, 0]),
                            "Q": Subspace.ray([1, 1])})
    m = make_model(
        ["S1", "S2"], {"S1": ["a"], "S2": ["a"]}, ["P", "Q"],
        {"S1": {"P": ["a"], "Q": []}, "S2": {"P": [], "Q": ["a"]}},
        hilbert=ann)
    with pytest.raises(NotOperationClosed):
        state_lattice(m)


# ---------------------------------------------------------------------------
# closure generation


def test_closure_qutrit_has_twelve_elements():
    e = np.eye(3)
    gens = [Subspace.ray(e[0]), Subspace.ray(e[1]), Subspace.ray(e[2]),
            Subspace.ray([1, 1, 0])]
    out = closure_generate(3, gens, cap=64)
    assert len(out) == 12
    ranks = sorted(s.rank for s in out)
    assert ranks == [0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3]


def test_closure_cap():
    e = np.eye(3)
    gens = [Subspace.ray(e[0]), Subspace.ray(e[1]), Subspace.ray(e[2]),
            Subspace.ray([1, 1, 0])]
    with pytest.raises(ClosureCapExceeded):
        closure_generate(3, gens, cap=5)


def test_qutrit_model_states_cover_rays():
    m = m_qutrit()
    assert len(m.states) == 5
    lat = state_lattice(m)
    assert lat.poset.n == 12
