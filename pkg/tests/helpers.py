"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to
check: the universal-proposition oracle enumerates interpretations
instead of inspecting extensions, and the subspace oracle works on
projector matrices instead of basis rows.
"""

from __future__ import annotations

import random

import numpy as np

from qlprop.model import Model, enumerate_interpretations, make_model
from qlprop.semantics import individual_proposition
from qlprop.syntax import A, And, Assert, Atom, K, N, Not, Or, QNot

# ---------------------------------------------------------------------------
# oracles


def brute_force_physical(m: Model, f) -> frozenset:
    """States where f holds under every interpretation, by enumeration."""
    out = frozenset(m.states)
    for interp in enumerate_interpretations(m):
        out &= individual_proposition(m, interp, f)
        if not out:
            break
    return out


def projector_join(pa: np.ndarray, pb: np.ndarray, thresh=1e-6) -> np.ndarray:
    """Projector onto the span of two projector ranges.

    Eigenvectors of pa + pb with nonzero eigenvalue span the joint
    range; the threshold separates them from numerical zeros.
    """
    w, v = np.linalg.eigh(pa + pb)
    cols = v[:, w > thresh]
    return cols @ cols.conj().T


def projector_meet(pa: np.ndarray, pb: np.ndarray, thresh=1e-6) -> np.ndarray:
    """Projector onto the intersection of two projector ranges.

    A unit vector lies in both ranges exactly when its pa + pb
    eigenvalue is 2.
    """
    w, v = np.linalg.eigh(pa + pb)
    cols = v[:, np.abs(w - 2.0) < thresh]
    return cols @ cols.conj().T


# ---------------------------------------------------------------------------
# random structure generators (plain `random.Random`, always seeded)


def random_model(rng: random.Random, max_states=4, max_objects=3,
                 max_props=3, cms=False) -> Model:
    states = [f"S{i + 1}" for i in range(rng.randint(1, max_states))]
    props = [f"E{i + 1}" for i in range(rng.randint(1, max_props))]
    universes = {}
    extensions = {}
    for s in states:
        objs = [f"{s.lower()}o{j + 1}"
                for j in range(rng.randint(1, max_objects))]
        universes[s] = objs
        row = {}
        for e in props:
            if cms:
                row[e] = list(objs) if rng.random() < 0.5 else []
            else:
                row[e] = [o for o in objs if rng.random() < 0.5]
        extensions[s] = row
    return make_model(states, universes, props, extensions)


def random_formula(rng: random.Random, props, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(props))
    r = rng.random()
    if r < 1 / 3:
        return Not(random_formula(rng, props, depth - 1))
    ctor = And if r < 2 / 3 else Or
    return ctor(random_formula(rng, props, depth - 1),
                random_formula(rng, props, depth - 1))


def random_tq_formula(rng: random.Random, props, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return Atom(rng.choice(props))
    if rng.random() < 0.5:
        return QNot(random_tq_formula(rng, props, depth - 1))
    return And(random_tq_formula(rng, props, depth - 1),
               random_tq_formula(rng, props, depth - 1))


def random_prag_formula(rng: random.Random, props, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return Assert(Atom(rng.choice(props)))
    r = rng.random()
    if r < 1 / 3:
        return N(random_prag_formula(rng, props, depth - 1))
    ctor = K if r < 2 / 3 else A
    return ctor(random_prag_formula(rng, props, depth - 1),
                random_prag_formula(rng, props, depth - 1))


def random_unit(rng: random.Random, dim: int) -> np.ndarray:
    v = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1))
                  for _ in range(dim)])
    return v / np.linalg.norm(v)


def random_subspace_vectors(rng: random.Random, dim: int, rank: int):
    """`rank` generic vectors; generic means full rank with prob. 1."""
    return [random_unit(rng, dim) for _ in range(rank)]
