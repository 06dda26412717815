"""Finite-dimensional complex subspace algebra.

Subspaces are stored as row-orthonormal bases produced by modified
Gram-Schmidt with a re-orthogonalization pass, so containment tests reduce
to projection residuals.  The lattice operations are:

* ``join``  - orthonormalize the concatenated bases,
* ``ortho`` - complete the basis to the identity and keep the tail,
* ``meet``  - ``ortho(join(ortho(a), ortho(b)))``.

Rank identities (``rank(ortho(a)) == dim - rank(a)`` and the rank formula
for joins of generic spans) hold exactly, not just within tolerance,
because rank decisions are made once per vector against a fixed threshold.
"""

from __future__ import annotations

import warnings
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np

from .errors import (
    ClosureCapExceeded,
    DimensionMismatch,
    NoHilbertAnnotation,
    NonOrthonormalBasis,
    NotOperationClosed,
    QlpropError,
    RankError,
    ThetaNotInjectiveWarning,
    UnknownProperty,
)

if TYPE_CHECKING:  # pragma: no cover
    from .lattice import OrthoLattice
    from .model import Model

__all__ = [
    "DEFAULT_TOL", "Subspace", "contains", "ortho", "meet", "join",
    "certain_states", "state_lattice", "closure_generate",
]

DEFAULT_TOL = 1e-9


def _orthonormalize(vectors: Iterable, dim: int, tol: float,
                    seed_basis: Sequence[np.ndarray] = ()) -> list[np.ndarray]:
    """Modified Gram-Schmidt with one re-orthogonalization pass.

    Vectors whose residual against the growing basis falls below ``tol``
    (relative to their original norm) are dropped.  ``seed_basis`` rows are
    assumed orthonormal already and are not re-emitted.
    """
    basis: list[np.ndarray] = [np.asarray(b, dtype=complex) for b in seed_basis]
    kept: list[np.ndarray] = []
    for v in vectors:
        w = np.asarray(v, dtype=complex).reshape(-1)
        if w.shape != (dim,):
            raise DimensionMismatch(
                f"vector of length {w.shape[0]} in dimension {dim}")
        scale = np.linalg.norm(w)
        if scale == 0.0:
            continue
        for _ in range(2):
            for b in basis:
                w = w - (b.conj() @ w) * b
        nrm = np.linalg.norm(w)
        if nrm > tol * max(1.0, scale):
            w = w / nrm
            basis.append(w)
            kept.append(w)
    return kept


class Subspace:
    """A closed subspace of C^dim, held as a row-orthonormal basis."""

    __slots__ = ("dim", "basis", "tol")

    def __init__(self, dim: int, basis=None, tol: float = DEFAULT_TOL):
        if dim < 1:
            raise DimensionMismatch(f"dimension must be positive, got {dim}")
        if basis is None:
            mat = np.zeros((0, dim), dtype=complex)
        else:
            mat = np.asarray(basis, dtype=complex)
            if mat.size == 0:
                mat = mat.reshape(0, dim)
            if mat.ndim != 2 or mat.shape[1] != dim:
                raise DimensionMismatch(
                    f"basis shape {mat.shape} does not fit dimension {dim}")
        gram = mat @ mat.conj().T
        if gram.shape[0] and np.max(np.abs(gram - np.eye(mat.shape[0]))) > max(tol, 1e-12):
            raise NonOrthonormalBasis(
                "basis rows are not orthonormal within tolerance")
        self.dim = dim
        self.basis = mat
        self.tol = tol

    # -- constructors -------------------------------------------------

    @classmethod
    def span(cls, vectors, dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        """Span of arbitrary vectors, orthonormalized."""
        rows = _orthonormalize(vectors, dim, tol)
        out = cls.__new__(cls)
        out.dim = dim
        out.basis = np.array(rows, dtype=complex).reshape(len(rows), dim)
        out.tol = tol
        return out

    @classmethod
    def zero(cls, dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        return cls(dim, None, tol)

    @classmethod
    def full(cls, dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        return cls(dim, np.eye(dim, dtype=complex), tol)

    @classmethod
    def ray(cls, vector, dim: int | None = None,
            tol: float = DEFAULT_TOL) -> "Subspace":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        d = dim if dim is not None else v.shape[0]
        s = cls.span([v], d, tol)
        if s.rank != 1:
            raise RankError("a ray needs one nonzero vector")
        return s

    # -- structure ----------------------------------------------------

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def project(self, v) -> np.ndarray:
        """Orthogonal projection of a vector onto this subspace."""
        v = np.asarray(v, dtype=complex).reshape(-1)
        if v.shape != (self.dim,):
            raise DimensionMismatch(
                f"vector of length {v.shape[0]} in dimension {self.dim}")
        if self.rank == 0:
            return np.zeros(self.dim, dtype=complex)
        return self.basis.T @ (self.basis.conj() @ v)

    def projector(self) -> np.ndarray:
        """The dim x dim orthogonal projection matrix."""
        return self.basis.T @ self.basis.conj()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.dim == other.dim and contains(self, other)
                and contains(other, self))

    __hash__ = None  # tolerance-based equality cannot hash consistently

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, rank={self.rank})"


def _check_dims(a: Subspace, b: Subspace):
    if a.dim != b.dim:
        raise DimensionMismatch(
            f"subspaces live in dimensions {a.dim} and {b.dim}")


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff every basis vector of ``b`` projects into ``a`` within tol."""
    _check_dims(a, b)
    tol = max(a.tol, b.tol)
    for v in b.basis:
        r = v - a.project(v)
        if np.linalg.norm(r) > tol:
            return False
    return True


def ortho(a: Subspace) -> Subspace:
    """Orthogonal complement; rank is exactly ``dim - rank(a)``."""
    comp = _orthonormalize(np.eye(a.dim, dtype=complex), a.dim, a.tol,
                           seed_basis=list(a.basis))
    if len(comp) != a.dim - a.rank:
        raise RankError(
            f"complement rank {len(comp)} != {a.dim - a.rank}")
    out = Subspace.__new__(Subspace)
    out.dim = a.dim
    out.basis = np.array(comp, dtype=complex).reshape(len(comp), a.dim)
    out.tol = a.tol
    return out


def join(a: Subspace, b: Subspace) -> Subspace:
    """Closed span of the union."""
    _check_dims(a, b)
    return Subspace.span(list(a.basis) + list(b.basis), a.dim,
                         max(a.tol, b.tol))


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, computed as the complement of the join of complements."""
    _check_dims(a, b)
    return ortho(join(ortho(a), ortho(b)))


# ---------------------------------------------------------------------------
# Model-facing operations


def certain_states(model: "Model", prop: str) -> frozenset[str]:
    """States whose ray lies inside the property's subspace.

    This is the map sending each property to the set of states where it
    is certain; its image, ordered by inclusion, is the lattice of
    physical propositions of the quantum model.
    """
    ann = model.hilbert
    if ann is None:
        raise NoHilbertAnnotation("model carries no Hilbert annotation")
    if prop not in ann.property_subspaces:
        raise UnknownProperty(f"no subspace for property {prop!r}")
    sub = ann.property_subspaces[prop]
    return frozenset(s for s in model.states
                     if contains(sub, ann.state_rays[s]))


def _lookup_property(subs: dict[str, Subspace], target: Subspace) -> str | None:
    for name, s in subs.items():
        if s == target:
            return name
    return None


def state_lattice(model: "Model") -> "OrthoLattice":
    """Ortholattice of certain-state sets of a quantum model.

    Requires the declared property subspaces to be closed under
    complement, meet and join; the lattice operations are induced through
    the subspace operations and then validated against the order.  If two
    properties share a certain-state set the lattice is still built, with
    a warning, using the first property per set in declaration order.
    """
    from .lattice import FinitePoset, OrthoLattice, build_poset

    ann = model.hilbert
    if ann is None:
        raise NoHilbertAnnotation("model carries no Hilbert annotation")
    props = list(model.properties)
    subs = {e: ann.property_subspaces[e] for e in props}

    ortho_prop: dict[str, str] = {}
    for e in props:
        name = _lookup_property(subs, ortho(subs[e]))
        if name is None:
            raise NotOperationClosed(
                f"no property realises the complement of {e!r}",
                witness=(e, "ortho"))
        ortho_prop[e] = name
    meet_prop: dict[tuple[str, str], str] = {}
    join_prop: dict[tuple[str, str], str] = {}
    for e in props:
        for f in props:
            name = _lookup_property(subs, meet(subs[e], subs[f]))
            if name is None:
                raise NotOperationClosed(
                    f"no property realises the meet of {e!r} and {f!r}",
                    witness=(e, f, "meet"))
            meet_prop[e, f] = name
            name = _lookup_property(subs, join(subs[e], subs[f]))
            if name is None:
                raise NotOperationClosed(
                    f"no property realises the join of {e!r} and {f!r}",
                    witness=(e, f, "join"))
            join_prop[e, f] = name

    images = {e: certain_states(model, e) for e in props}
    rep_for_image: dict[frozenset, str] = {}
    reps: list[str] = []
    for e in props:
        if images[e] not in rep_for_image:
            rep_for_image[images[e]] = e
            reps.append(e)
        else:
            warnings.warn(
                f"properties {rep_for_image[images[e]]!r} and {e!r} share "
                f"the certain-state set; using the first",
                ThetaNotInjectiveWarning)

    elements = [images[e] for e in reps]
    order = list(model.states)

    def label(s: frozenset) -> str:
        return "{" + ", ".join(x for x in order if x in s) + "}"

    poset: FinitePoset = build_poset(
        elements, leq=lambda x, y: x <= y, labels=[label(s) for s in elements])

    idx = {images[e]: poset.index_of(images[e]) for e in reps}
    n = len(elements)
    meet_t = np.zeros((n, n), dtype=int)
    join_t = np.zeros((n, n), dtype=int)
    ortho_t = np.zeros(n, dtype=int)
    for i, e in enumerate(reps):
        ortho_t[i] = idx[images[ortho_prop[e]]]
        for j, f in enumerate(reps):
            mi = idx[images[meet_prop[e, f]]]
            meet_t[i, j] = mi
            join_t[i, j] = idx[images[join_prop[e, f]]]
            # the meet of certain-state sets is plain intersection
            if elements[mi] != (elements[i] & elements[j]):
                raise QlpropError(
                    f"meet of {e!r} and {f!r} is not the set intersection")
    return OrthoLattice(poset, meet_t, join_t, ortho_t)


def closure_generate(dim: int, generators: Sequence[Subspace], cap: int,
                     tol: float = DEFAULT_TOL) -> list[Subspace]:
    """Smallest set of subspaces containing the generators and closed
    under complement, meet and join.

    Elements are deduplicated by mutual containment and returned in a
    deterministic generation order.  Raises :class:`ClosureCapExceeded`
    if the closure would grow past ``cap`` (some generator configurations
    have infinite closures).
    """
    if cap < len(generators):
        raise ClosureCapExceeded(
            f"cap {cap} is smaller than the {len(generators)} generators")
    elems: list[Subspace] = []

    def add(s: Subspace):
        for e in elems:
            if e == s:
                return
        if len(elems) + 1 > cap:
            raise ClosureCapExceeded(f"closure exceeds cap {cap}")
        elems.append(s)

    for g in generators:
        if g.dim != dim:
            raise DimensionMismatch(
                f"generator of dimension {g.dim} in closure of dimension {dim}")
        add(g)
    changed = True
    while changed:
        size = len(elems)
        for i in range(size):
            add(ortho(elems[i]))
        for i in range(size):
            for j in range(i + 1, size):
                add(meet(elems[i], elems[j]))
                add(join(elems[i], elems[j]))
        changed = len(elems) != size
    return elems
