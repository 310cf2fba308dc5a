"""Exact S-lengths by breadth-first search, and exact commutator/torsion
lengths in small permutation groups.

Search only ever runs over finite S; infinite S (all commutators, all torsion
elements) in infinite groups is handled by witnesses and bound certificates.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError, InvariantViolation, ResourceError
from .groups import Permutation, ProjMatrix2, SymmetricGroup, commutator
from .groups.ops import same_group

DEFAULT_CAP = 1 << 22
MAX_DEGREE = 8


@dataclass(frozen=True)
class GeneratingSet:
    elements: tuple
    label: str = "S"

    def __post_init__(self):
        seen = []
        for s in self.elements:
            if s not in seen:
                seen.append(s)
        if not seen:
            raise DomainError("generating set is empty")
        for s in seen[1:]:
            same_group(seen[0], s)
        object.__setattr__(self, "elements", tuple(seen))

    @classmethod
    def symmetric_closure(cls, elements: Iterable, label: str = "S") -> GeneratingSet:
        out = []
        for s in elements:
            out += [s, s.inverse()]
        return cls(tuple(out), label)

    @property
    def symmetric(self) -> bool:
        return all(s.inverse() in self.elements for s in self.elements)

    @property
    def group(self) -> str:
        return self.elements[0].group

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class LengthResult:
    """``kind`` is ``"exact"`` or ``"at_least"``.

    ``saturated`` means the search closed up (no new products appear), so an
    ``at_least`` result actually holds for every bound: the length is infinite.
    """

    kind: str
    value: int
    radius_searched: int
    saturated: bool = False

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def __str__(self) -> str:
        return f"Exact({self.value})" if self.is_exact else f"AtLeast({self.value})"


class _Search:
    """Layered BFS state: ``dist`` keeps insertion order, layer by layer."""

    def __init__(self, S: GeneratingSet, identity, cap: int):
        self.S = S.elements
        self.cap = cap
        self.dist = {identity: 0}
        self.frontier = [identity]
        self.radius = 0
        self.saturated = False

    def grow(self, target=None) -> bool:
        """Add one layer; return True as soon as ``target`` is inserted."""
        nxt = []
        r = self.radius + 1
        dist = self.dist
        for x in self.frontier:
            for s in self.S:
                y = x * s
                if y in dist:
                    continue
                dist[y] = r
                nxt.append(y)
                if y == target:
                    self.frontier = nxt
                    self.radius = r
                    return True
                if len(dist) > self.cap:
                    for z in nxt:
                        del dist[z]
                    raise ResourceError(
                        f"ball exceeded {self.cap} elements at radius {r}",
                        partial={"ball": dict(dist), "radius": self.radius},
                    )
        self.frontier = nxt
        self.radius = r
        if not nxt:
            self.saturated = True
        return False


def ball(S: GeneratingSet, radius: int, *, cap: int = DEFAULT_CAP) -> dict:
    """All products of at most ``radius`` elements of S, mapped to their minimal factor count.

    On overflow, ``ResourceError.partial`` holds ``{"ball", "radius"}`` for the
    last complete radius.
    """
    if radius < 1:
        raise DomainError("radius must be >= 1")
    search = _Search(S, S.elements[0].identity(), cap)
    while search.radius < radius and not search.saturated:
        search.grow()
    return search.dist


def _bfs_length(g, S: GeneratingSet, max_radius: int, cap: int) -> LengthResult:
    search = _Search(S, g.identity(), cap)
    if g in search.dist:
        return LengthResult("exact", 0, 0)
    try:
        while search.radius < max_radius and not search.saturated:
            if search.grow(g):
                return LengthResult("exact", search.radius, search.radius)
    except ResourceError as exc:
        done = exc.partial["radius"]
        return LengthResult("at_least", done + 1, done)
    return LengthResult("at_least", max_radius + 1, search.radius, search.saturated)


def _mitm_length(g, S: GeneratingSet, max_radius: int, cap: int) -> LengthResult:
    r1, r2 = (max_radius + 1) // 2, max_radius // 2
    try:
        left = _Search(S, g.identity(), cap)
        while left.radius < r1 and not left.saturated:
            left.grow()
        right = _Search(S, g.identity(), cap)
        while right.radius < r2 and not right.saturated:
            right.grow()
    except ResourceError as exc:
        done = exc.partial["radius"]
        return LengthResult("at_least", done + 1, done)
    best = None
    for y, j in right.dist.items():
        i = left.dist.get(g * y.inverse())
        if i is not None and (best is None or i + j < best):
            best = i + j
    if best is not None:
        return LengthResult("exact", best, max_radius)
    return LengthResult("at_least", max_radius + 1, max_radius, left.saturated)


def length_exact(
    g, S: GeneratingSet, max_radius: int, *, method: str = "bfs", cap: int = DEFAULT_CAP
) -> LengthResult:
    """S-length of ``g`` if it is at most ``max_radius``.

    ``method="mitm"`` meets in the middle with two balls of half radius and
    returns the same answers. A memory-cap overflow is not raised: the result
    is downgraded to ``AtLeast(completed radius + 1)``.
    """
    same_group(g, S.elements[0])
    if max_radius < 0:
        raise DomainError("max_radius must be >= 0")
    if method == "bfs":
        return _bfs_length(g, S, max_radius, cap)
    if method == "mitm":
        if g.is_identity():
            return LengthResult("exact", 0, 0)
        return _mitm_length(g, S, max_radius, cap)
    raise DomainError(f"unknown search method {method!r}")


def ambient_elements(degree: int, ambient: str = "symmetric") -> list[Permutation]:
    if degree > MAX_DEGREE:
        raise ResourceError(f"degree {degree} exceeds the enumeration cap {MAX_DEGREE}")
    if ambient not in ("symmetric", "alternating"):
        raise DomainError(f"ambient must be 'symmetric' or 'alternating', got {ambient!r}")
    return list(SymmetricGroup(degree).elements(alternating=ambient == "alternating"))


def conjugacy_classes(G: Sequence) -> list[list]:
    seen = set()
    classes = []
    inverses = [h.inverse() for h in G]
    for x in G:
        if x in seen:
            continue
        cls = {h * x * hi for h, hi in zip(G, inverses)}
        seen |= cls
        classes.append(sorted(cls, key=str))
    return classes


def commutator_set(G: Sequence, classes: Optional[list] = None) -> set:
    """``{[x, y] : x, y in G}``.

    Only class representatives are used for ``x``; the result is then closed
    under conjugation, since ``[hxh^-1, hyh^-1] = h[x,y]h^-1``.
    """
    classes = classes if classes is not None else conjugacy_classes(G)
    found = set()
    for cls in classes:
        x = cls[0]
        for y in G:
            found.add(commutator(x, y))
    return {z for cls in classes if any(c in found for c in cls) for z in cls}


def _class_invariant_length(g, S: set, classes: list, max_radius: Optional[int]) -> LengthResult:
    # S is a union of conjugacy classes, so every ball is too: search over classes.
    class_of = {}
    for k, cls in enumerate(classes):
        for z in cls:
            class_of[z] = k
    identity = g.identity()
    if g == identity:
        return LengthResult("exact", 0, 0)
    limit = max_radius if max_radius is not None else len(classes)
    reached = {class_of[identity]: 0}
    S_inv = [s.inverse() for s in S]
    r = 0
    while r < limit:
        r += 1
        new = [
            k for k, cls in enumerate(classes)
            if k not in reached and any(class_of[cls[0] * si] in reached for si in S_inv)
        ]
        for k in new:
            reached[k] = r
        if g in class_of and class_of[g] in reached:
            return LengthResult("exact", reached[class_of[g]], r)
        if not new:
            return LengthResult("at_least", limit + 1, r, saturated=True)
    return LengthResult("at_least", limit + 1, r)


def _check_degree(g: Permutation) -> None:
    if not isinstance(g, Permutation):
        raise DomainError(f"expected a Permutation, got {type(g).__name__}")


def commutator_length_finite(
    g: Permutation, ambient: str = "symmetric", max_radius: Optional[int] = None
) -> LengthResult:
    """Commutator length of ``g`` with commutators taken in the ambient group
    (``"symmetric"`` or ``"alternating"`` on ``g.degree`` points)."""
    _check_degree(g)
    G = ambient_elements(g.degree, ambient)
    classes = conjugacy_classes(G)
    C = commutator_set(G, classes) - {g.identity()}
    if not C:
        if g.is_identity():
            return LengthResult("exact", 0, 0)
        limit = max_radius if max_radius is not None else len(classes)
        return LengthResult("at_least", limit + 1, 0, saturated=True)
    if g not in set(G):
        # the search never leaves the ambient group
        limit = max_radius if max_radius is not None else len(classes)
        return LengthResult("at_least", limit + 1, 0, saturated=True)
    return _class_invariant_length(g, C, classes, max_radius)


def torsion_length_finite(g: Permutation, ambient: str = "symmetric") -> LengthResult:
    """Every element of a finite group is torsion, so this is 0 or 1."""
    _check_degree(g)
    G = ambient_elements(g.degree, ambient)
    T = [x for x in G if not x.is_identity()]
    if not T:
        return length_exact(g, GeneratingSet((g.identity(),), "T"), 1)
    result = length_exact(g, GeneratingSet(tuple(T), "T"), 1)
    if g in set(G) and not (result.is_exact and result.value <= 1):
        raise InvariantViolation(f"torsion length of {g} came out {result}")
    return result


def torsion_length_upper_projective(g: ProjMatrix2):
    """``(k, witness)``: ``k`` torsion factors (the normal-form syllables) multiply to ``g``."""
    from .certificates.witness import projective_torsion_witness

    if not isinstance(g, ProjMatrix2):
        raise DomainError(f"expected a ProjMatrix2, got {type(g).__name__}")
    if g.is_identity():
        raise DomainError("identity has torsion length 0; no witness needed")
    w = projective_torsion_witness(g)
    return len(w), w


def write_ball_csv(dist: dict, path) -> None:
    from .groups import format_element

    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["element", "length"])
        for x, k in dist.items():
            out.writerow([format_element(x), k])

