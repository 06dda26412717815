"""Finite posets, ortholattices and law checkers.

Posets hold opaque element payloads with display labels; all relations
are stored index-based as boolean numpy matrices.  Law checkers return a
:class:`LawReport` of named pass/fail results with witnesses instead of
raising, so that expected failures (distributivity in quantum lattices,
orthomodularity in the hexagon fixture) can be inspected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    IncompatiblePreorder,
    MeetJoinMissing,
    NotAPartialOrder,
    QlpropError,
    SearchCapExceeded,
)

__all__ = [
    "FinitePoset", "build_poset", "quotient_poset",
    "LawCheck", "LawReport", "check_boolean",
    "OrthoLattice", "ortho_lattice_from_poset", "check_ortho_modular",
    "order_isomorphic", "export_dot", "powerset_lattice", "hexagon",
]


@dataclass
class FinitePoset:
    """A finite partial order over opaque payloads."""

    elements: tuple
    labels: tuple[str, ...]
    leq: np.ndarray  # boolean (n, n); leq[i, j] means elements[i] <= elements[j]

    @property
    def n(self) -> int:
        return len(self.elements)

    def index_of(self, element) -> int:
        """Index of a payload, located by equality (works for unhashables)."""
        for i, e in enumerate(self.elements):
            if e == element:
                return i
        raise KeyError(f"element not in poset: {element!r}")

    def lower_mask(self, i: int, j: int) -> np.ndarray:
        return self.leq[:, i] & self.leq[:, j]

    def meet_index(self, i: int, j: int) -> int | None:
        mask = self.lower_mask(i, j)
        if not mask.any():
            return None
        below = np.flatnonzero(mask)
        ok = self.leq[below, :].all(axis=0) & mask
        hits = np.flatnonzero(ok)
        return int(hits[0]) if hits.size == 1 else None

    def join_index(self, i: int, j: int) -> int | None:
        mask = self.leq[i, :] & self.leq[j, :]
        if not mask.any():
            return None
        above = np.flatnonzero(mask)
        ok = self.leq[:, above].all(axis=1) & mask
        hits = np.flatnonzero(ok)
        return int(hits[0]) if hits.size == 1 else None

    def bottom_index(self) -> int | None:
        for i in range(self.n):
            if self.leq[i, :].all():
                return i
        return None

    def top_index(self) -> int | None:
        for i in range(self.n):
            if self.leq[:, i].all():
                return i
        return None

    def cover_matrix(self) -> np.ndarray:
        less = self.leq & ~np.eye(self.n, dtype=bool)
        return less & ~(less @ less)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges as (lower, upper) index pairs."""
        cm = self.cover_matrix()
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cm))]

    def atom_indices(self) -> list[int]:
        """Elements covering the bottom (requires a bottom)."""
        b = self.bottom_index()
        if b is None:
            return []
        cm = self.cover_matrix()
        return [int(j) for j in np.flatnonzero(cm[b, :])]


def build_poset(elements: Sequence, leq: Callable | np.ndarray,
                labels: Sequence[str] | None = None) -> FinitePoset:
    """Build and validate a poset from payloads and an order predicate
    (or a precomputed boolean matrix)."""
    els = tuple(elements)
    n = len(els)
    if callable(leq):
        mat = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                mat[i, j] = bool(leq(els[i], els[j]))
    else:
        mat = np.asarray(leq, dtype=bool)
        if mat.shape != (n, n):
            raise NotAPartialOrder(f"matrix shape {mat.shape} for {n} elements")
    if labels is None:
        labels = tuple(str(e) for e in els)
    else:
        labels = tuple(labels)
        if len(labels) != n:
            raise NotAPartialOrder(f"{len(labels)} labels for {n} elements")

    for i in range(n):
        if not mat[i, i]:
            raise NotAPartialOrder(f"not reflexive at {labels[i]!r}",
                                   witness=(els[i],))
    both = mat & mat.T & ~np.eye(n, dtype=bool)
    if both.any():
        i, j = map(int, next(zip(*np.nonzero(both))))
        raise NotAPartialOrder(
            f"antisymmetry fails between {labels[i]!r} and {labels[j]!r}",
            witness=(els[i], els[j]))
    closure = mat @ mat
    gap = closure & ~mat
    if gap.any():
        i, j = map(int, next(zip(*np.nonzero(gap))))
        k = int(np.nonzero(mat[i] & mat[:, j])[0][0])
        raise NotAPartialOrder(
            f"transitivity fails from {labels[i]!r} via {labels[k]!r} "
            f"to {labels[j]!r}", witness=(els[i], els[k], els[j]))
    return FinitePoset(els, labels, mat)


def quotient_poset(items: Sequence, equiv: Callable, leq: Callable,
                   label: Callable | None = None) -> FinitePoset:
    """Quotient of a preordered family by an equivalence.

    Classes are represented by their first item in input order.  The
    preorder must be constant on classes; a violating quadruple raises
    :class:`IncompatiblePreorder`.
    """
    classes: list[list] = []
    for it in items:
        for cls in classes:
            if equiv(it, cls[0]):
                cls.append(it)
                break
        else:
            classes.append([it])
    for ca, cb in itertools.product(classes, repeat=2):
        want = bool(leq(ca[0], cb[0]))
        for x in ca:
            for y in cb:
                if bool(leq(x, y)) != want:
                    raise IncompatiblePreorder(
                        "order relation is not constant on equivalence "
                        "classes", witness=(ca[0], cb[0], x, y))
    reps = [cls[0] for cls in classes]
    labels = [label(r) if label else str(r) for r in reps]
    return build_poset(reps, leq, labels)


# ---------------------------------------------------------------------------
# Law reports


@dataclass(frozen=True)
class LawCheck:
    law: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class LawReport:
    checks: tuple[LawCheck, ...]

    def __getitem__(self, law: str) -> LawCheck:
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)

    def passed(self, law: str) -> bool:
        return self[law].passed

    def all_passed(self, exclude: Sequence[str] = ()) -> bool:
        return all(c.passed for c in self.checks if c.law not in exclude)


def _meet_join_tables(p: FinitePoset) -> tuple[np.ndarray, np.ndarray]:
    n = p.n
    meet = np.zeros((n, n), dtype=int)
    join = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            m = p.meet_index(i, j)
            if m is None:
                raise MeetJoinMissing(
                    f"no meet for {p.labels[i]!r} and {p.labels[j]!r}",
                    witness=(i, j))
            meet[i, j] = m
            v = p.join_index(i, j)
            if v is None:
                raise MeetJoinMissing(
                    f"no join for {p.labels[i]!r} and {p.labels[j]!r}",
                    witness=(i, j))
            join[i, j] = v
    return meet, join


def check_boolean(p: FinitePoset) -> LawReport:
    """Check the Boolean lattice laws on a finite poset.

    Requires every binary meet and join to exist (raises
    :class:`MeetJoinMissing` otherwise).  Laws checked: boundedness, both
    distributivity directions, existence and uniqueness of complements.
    """
    meet, join = _meet_join_tables(p)
    checks: list[LawCheck] = []
    bot, top = p.bottom_index(), p.top_index()
    checks.append(LawCheck("bounded", bot is not None and top is not None))

    def first_violation(law_fn):
        for x, y, z in itertools.product(range(p.n), repeat=3):
            if not law_fn(x, y, z):
                return (p.labels[x], p.labels[y], p.labels[z])
        return None

    w = first_violation(lambda x, y, z: meet[x, join[y, z]]
                        == join[meet[x, y], meet[x, z]])
    checks.append(LawCheck("distributive_meet_over_join", w is None, w))
    w = first_violation(lambda x, y, z: join[x, meet[y, z]]
                        == meet[join[x, y], join[x, z]])
    checks.append(LawCheck("distributive_join_over_meet", w is None, w))

    if bot is not None and top is not None:
        bad = None
        for x in range(p.n):
            comps = [y for y in range(p.n)
                     if meet[x, y] == bot and join[x, y] == top]
            if len(comps) != 1:
                bad = (p.labels[x], len(comps))
                break
        checks.append(LawCheck("unique_complement", bad is None, bad))
    else:
        checks.append(LawCheck("unique_complement", False, None))
    return LawReport(tuple(checks))


# ---------------------------------------------------------------------------
# Ortholattices


@dataclass
class OrthoLattice:
    """A bounded lattice with an orthocomplementation, given by tables.

    ``meet``/``join`` are index tables over the poset; ``ortho`` maps each
    element index to its orthocomplement's index.  Construction validates
    that the tables agree with the order (the tables are the glb/lub of
    the poset) and that top and bottom exist; the orthocomplementation
    laws themselves are examined by :func:`check_ortho_modular`.
    """

    poset: FinitePoset
    meet: np.ndarray
    join: np.ndarray
    ortho: np.ndarray
    bottom: int = field(init=False)
    top: int = field(init=False)

    def __post_init__(self):
        p = self.poset
        bot, top = p.bottom_index(), p.top_index()
        if bot is None or top is None:
            raise MeetJoinMissing("ortholattice must be bounded")
        self.bottom, self.top = bot, top
        want_meet, want_join = _meet_join_tables(p)
        if not (np.array_equal(self.meet, want_meet)
                and np.array_equal(self.join, want_join)):
            raise QlpropError(
                "meet/join tables disagree with the poset's glb/lub")
        if sorted(int(x) for x in self.ortho) != list(range(p.n)):
            raise QlpropError("ortho table is not a permutation")

    @property
    def n(self) -> int:
        return self.poset.n

    def label(self, i: int) -> str:
        return self.poset.labels[i]


def ortho_lattice_from_poset(p: FinitePoset, ortho: Sequence[int]) -> OrthoLattice:
    """Complete a poset to an ortholattice by computing glb/lub tables."""
    meet, join = _meet_join_tables(p)
    return OrthoLattice(p, meet, join, np.asarray(ortho, dtype=int))


def check_ortho_modular(l: OrthoLattice) -> LawReport:
    """Pass/fail report for ortholattice axioms on a finite structure.

    Checked: involution, order reversal and complementation of the
    orthomap; the orthomodular law; atomicity and atomisticity; the
    covering law; and plain modularity.  Modularity is informational only
    (quantum state lattices need not be modular), so callers should
    exclude it when asserting.
    """
    p, n = l.poset, l.n
    checks: list[LawCheck] = []

    w = next(((p.labels[i],) for i in range(n)
              if l.ortho[l.ortho[i]] != i), None)
    checks.append(LawCheck("ortho_involution", w is None, w))

    w = None
    for i, j in itertools.product(range(n), repeat=2):
        if p.leq[i, j] and not p.leq[l.ortho[j], l.ortho[i]]:
            w = (p.labels[i], p.labels[j])
            break
    checks.append(LawCheck("ortho_order_reversal", w is None, w))

    w = next(((p.labels[i],) for i in range(n)
              if l.meet[i, l.ortho[i]] != l.bottom
              or l.join[i, l.ortho[i]] != l.top), None)
    checks.append(LawCheck("ortho_complement", w is None, w))

    w = None
    for i, j in itertools.product(range(n), repeat=2):
        if p.leq[i, j] and l.join[i, l.meet[l.ortho[i], j]] != j:
            w = (p.labels[i], p.labels[j])
            break
    checks.append(LawCheck("orthomodular", w is None, w))

    atoms = p.atom_indices()
    is_atom = np.zeros(n, dtype=bool)
    is_atom[atoms] = True
    w = next(((p.labels[i],) for i in range(n)
              if i != l.bottom and not any(p.leq[a, i] for a in atoms)), None)
    checks.append(LawCheck("atomic", w is None, w))

    w = None
    for i in range(n):
        below = [a for a in atoms if p.leq[a, i]]
        acc = l.bottom
        for a in below:
            acc = l.join[acc, a]
        if acc != i:
            w = (p.labels[i],)
            break
    checks.append(LawCheck("atomistic", w is None, w))

    cm = p.cover_matrix()
    w = None
    for a in atoms:
        for i in range(n):
            if l.meet[i, a] == l.bottom and i != l.join[i, a]:
                if not cm[i, l.join[i, a]]:
                    w = (p.labels[i], p.labels[a])
                    break
        if w:
            break
    checks.append(LawCheck("covering", w is None, w))

    w = None
    for a, b, c in itertools.product(range(n), repeat=3):
        if p.leq[a, c] and l.join[a, l.meet[b, c]] != l.meet[l.join[a, b], c]:
            w = (p.labels[a], p.labels[b], p.labels[c])
            break
    checks.append(LawCheck("modular", w is None, w))
    return LawReport(tuple(checks))


# ---------------------------------------------------------------------------
# Isomorphism and export


def order_isomorphic(a: FinitePoset, b: FinitePoset,
                     cap: int = 12) -> dict[int, int] | None:
    """Backtracking search for an order isomorphism; None if there is none.

    Capped by element count (default 12) to keep the search bounded;
    raises :class:`SearchCapExceeded` beyond the cap.
    """
    if a.n != b.n:
        return None
    if a.n > cap:
        raise SearchCapExceeded(
            f"isomorphism search capped at {cap} elements, got {a.n}")
    n = a.n

    def signature(p: FinitePoset, i: int) -> tuple:
        return (int(p.leq[i, :].sum()), int(p.leq[:, i].sum()))

    sig_a = [signature(a, i) for i in range(n)]
    sig_b = [signature(b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_a[i] != sig_b[j]:
                continue
            ok = True
            for k, jk in mapping.items():
                if (a.leq[i, k] != b.leq[j, jk]
                        or a.leq[k, i] != b.leq[jk, j]):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                del mapping[i]
                used[j] = False
        return False

    return dict(mapping) if extend(0) else None


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p: FinitePoset) -> str:
    """Hasse diagram in DOT syntax, edges pointing upward."""
    lines = ["digraph {", "  rankdir=BT;"]
    for lab in p.labels:
        lines.append(f"  {_dot_quote(lab)};")
    for i, j in p.covers():
        lines.append(f"  {_dot_quote(p.labels[i])} -> {_dot_quote(p.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Fixtures


def powerset_lattice(items: Sequence) -> FinitePoset:
    """The lattice of all subsets of ``items``, ordered by inclusion."""
    base = list(items)
    subsets = [frozenset(c) for r in range(len(base) + 1)
               for c in itertools.combinations(base, r)]

    def label(s: frozenset) -> str:
        return "{" + ", ".join(str(x) for x in base if x in s) + "}"

    return build_poset(subsets, lambda x, y: x <= y,
                       [label(s) for s in subsets])


def hexagon() -> OrthoLattice:
    """The six-element benzene-ring ortholattice.

    An ortholattice that is *not* orthomodular: with the two chains
    0 < a < b < 1 and 0 < c < d < 1 and complements a' = d, b' = c, the
    pair a <= b violates b = a v (a' ^ b).  Useful as the negative
    fixture for the orthomodularity checker.
    """
    labels = ["0", "a", "b", "c", "d", "1"]
    n = 6
    leq = np.eye(n, dtype=bool)
    order = {(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
             (1, 2), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)}
    for i, j in order:
        leq[i, j] = True
    p = build_poset(labels, leq, labels)
    return ortho_lattice_from_poset(p, [5, 4, 3, 2, 1, 0])
