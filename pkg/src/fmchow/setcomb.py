"""Combinatorics of weight chambers.

A weight vector a in [0,1]^n declares a subset S of the marked points
"large" when sum(a_i, i in S) > 1; large sets are exactly the clusters of
points that are never allowed to collide.  Everything downstream depends
on the weights only through the upward-closed family of large sets, so
that family is the primary abstraction here.  This module also provides
the two pieces of machinery the inductive constructions need: walks
(superset-first linear orders on the large sets, one wall crossing at a
time) and index merging (replacing a cluster T by a single merged point).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from fmchow.errors import SizeCapError, WalkOrderError

Subset = frozenset

#: default bound on the number of large sets for exhaustive walk enumeration
WALK_ENUMERATION_CAP = 8


def subset_key(s):
    """Deterministic (size, lexicographic) sort key for subsets."""
    return (len(s), tuple(sorted(s)))


def is_overlap(s, t) -> bool:
    """True iff the intersection is nonempty and proper in both sets."""
    s, t = frozenset(s), frozenset(t)
    inter = s & t
    return bool(inter) and inter != s and inter != t


@dataclass(frozen=True)
class Weights:
    """Exact rational weights for n marked points, each in [0, 1]."""

    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValueError("at least one weight is required")
        vals = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for a in vals:
            if not 0 <= a <= 1:
                raise ValueError(f"weight {a} outside [0, 1]")

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Weights":
        """Parse weights given as exact 'p/q' (or integer) strings."""
        return cls(tuple(Fraction(s) for s in strings))

    @property
    def n(self) -> int:
        return len(self.values)

    def is_all_ones(self) -> bool:
        return all(a == 1 for a in self.values)


@dataclass(frozen=True)
class LargeFamily:
    """An upward-closed family of subsets of {1..n}, all of size >= 2.

    Members are the "large" sets.  The complementary small sets then form
    an abstract simplicial complex containing every singleton.  Any family
    satisfying the invariants is accepted, whether or not it is realized
    by a weight vector.
    """

    n: int
    members: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        members = frozenset(frozenset(s) for s in self.members)
        object.__setattr__(self, "members", members)
        ground = frozenset(range(1, self.n + 1))
        for s in members:
            if not s <= ground:
                raise ValueError(f"member {sorted(s)} not a subset of 1..{self.n}")
            if len(s) < 2:
                raise ValueError(f"member {sorted(s)} has fewer than two elements")
        for s in members:
            for extra in ground - s:
                if s | {extra} not in members:
                    raise ValueError(
                        f"family is not upward closed: {sorted(s)} is a member "
                        f"but {sorted(s | {extra})} is not"
                    )

    @classmethod
    def empty(cls, n: int) -> "LargeFamily":
        return cls(n, frozenset())

    @classmethod
    def all_subsets(cls, n: int) -> "LargeFamily":
        """Every subset of size >= 2 large (the all-ones weight chamber)."""
        ground = list(range(1, n + 1))
        sets = [frozenset(c) for k in range(2, n + 1) for c in combinations(ground, k)]
        return cls(n, frozenset(sets))

    @classmethod
    def from_weights(cls, weights: Weights) -> "LargeFamily":
        """Large sets of a weight vector: strict inequality, so sets lying
        exactly on a wall (sum equal to 1) count as small."""
        ground = list(range(1, weights.n + 1))
        members = [
            frozenset(c)
            for k in range(2, weights.n + 1)
            for c in combinations(ground, k)
            if sum(weights.values[i - 1] for i in c) > 1
        ]
        return cls(weights.n, frozenset(members))

    @classmethod
    def closure(cls, n: int, sets: Iterable) -> "LargeFamily":
        """Upward closure of the given size->=2 generating sets."""
        ground = frozenset(range(1, n + 1))
        closed = set()
        for s in sets:
            s = frozenset(s)
            if len(s) < 2:
                raise ValueError(f"generator {sorted(s)} has fewer than two elements")
            if not s <= ground:
                raise ValueError(f"generator {sorted(s)} not a subset of 1..{n}")
            rest = sorted(ground - s)
            for k in range(len(rest) + 1):
                for extra in combinations(rest, k):
                    closed.add(s | frozenset(extra))
        return cls(n, frozenset(closed))

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list:
        return sorted(self.members, key=subset_key)

    def relabel(self, perm: Mapping[int, int]) -> "LargeFamily":
        """Apply a permutation of {1..n} to every member."""
        if sorted(perm) != list(range(1, self.n + 1)) or sorted(perm.values()) != list(
            range(1, self.n + 1)
        ):
            raise ValueError("relabeling must be a permutation of 1..n")
        return LargeFamily(
            self.n, frozenset(frozenset(perm[i] for i in s) for s in self.members)
        )


def _members_of(family_or_sets) -> list:
    members = getattr(family_or_sets, "members", family_or_sets)
    return [frozenset(s) for s in members]


def canonical_walk(family) -> list:
    """The fixed processing order: strictly decreasing cardinality, ties
    broken lexicographically.  Any superset-first order is a valid wall
    crossing sequence; this one is the deterministic default.  Accepts a
    LargeFamily or any collection of sets."""
    return sorted(_members_of(family), key=lambda s: (-len(s), tuple(sorted(s))))


def validate_walk(family: LargeFamily, steps) -> list:
    """Check that steps is a superset-first enumeration of the family."""
    steps = [frozenset(s) for s in steps]
    if len(steps) != len(family.members) or set(steps) != family.members:
        raise WalkOrderError("walk is not an enumeration of the family members")
    for j, s in enumerate(steps):
        for t in steps[j + 1 :]:
            if t > s:
                raise WalkOrderError(
                    f"walk visits {sorted(s)} before its superset {sorted(t)}"
                )
    return steps


def all_walks(family, cap: int = WALK_ENUMERATION_CAP) -> list:
    """Every superset-first enumeration of the family (linear extensions of
    reverse inclusion).  Refuses families with more than `cap` members,
    since the count can grow factorially.  Accepts a LargeFamily or any
    collection of sets."""
    members = sorted(_members_of(family), key=subset_key)
    if len(members) > cap:
        raise SizeCapError(
            f"family has {len(members)} members; walk enumeration is "
            f"capped at {cap}"
        )
    walks = []

    def extend(prefix, remaining):
        if not remaining:
            walks.append(list(prefix))
            return
        for s in remaining:
            if any(t > s for t in remaining if t is not s):
                continue  # a strict superset still unprocessed
            prefix.append(s)
            extend(prefix, [t for t in remaining if t is not s])
            prefix.pop()

    extend([], members)
    return walks


@dataclass(frozen=True)
class MergeResult:
    """Outcome of merging the cluster T into a single point.

    m is the merged point count, family the induced large family on the
    merged index set {1..m}, relabel maps each surviving original index to
    its merged label, and star is the merged label of the new point (which
    stands for the whole of T).
    """

    m: int
    family: LargeFamily
    relabel: dict
    star: int

    def expand(self, merged_set, t) -> frozenset:
        """Map a subset of the merged index set back to original indices,
        expanding the merged point to the cluster t."""
        inverse = {new: old for old, new in self.relabel.items()}
        out = set()
        for j in merged_set:
            if j == self.star:
                out |= set(t)
            else:
                out.add(inverse[j])
        return frozenset(out)


def merge_family(processed: LargeFamily, t) -> MergeResult:
    """Pass to the index set where the cluster t is one merged point.

    Valid only at a wall crossing: t itself must not yet be large while
    every strict superset of t already is.  The merged point takes the
    smallest label freed by t; the remaining indices are compressed
    preserving their order.  A merged set is large exactly when its
    expansion (merged point replaced by t) is large in `processed`.
    """
    t = frozenset(t)
    n = processed.n
    ground = frozenset(range(1, n + 1))
    if not t <= ground or len(t) < 2:
        raise ValueError(f"cluster {sorted(t)} is not a valid subset of 1..{n}")
    if t in processed:
        raise WalkOrderError(f"cluster {sorted(t)} is already large")
    rest = sorted(ground - t)
    for k in range(1, len(rest) + 1):
        for extra in combinations(rest, k):
            sup = t | frozenset(extra)
            if sup not in processed:
                raise WalkOrderError(
                    f"strict superset {sorted(sup)} of {sorted(t)} has not been "
                    "processed yet"
                )
    survivors = sorted(ground - t)
    ordered = sorted(survivors + [min(t)])
    new_label = {old: i + 1 for i, old in enumerate(ordered)}
    star = new_label[min(t)]
    relabel = {old: new_label[old] for old in survivors}
    m = len(ordered)

    inverse = {new: old for old, new in relabel.items()}
    merged_members = set()
    merged_ground = list(range(1, m + 1))
    for k in range(2, m + 1):
        for c in combinations(merged_ground, k):
            expanded = set()
            for j in c:
                if j == star:
                    expanded |= set(t)
                else:
                    expanded.add(inverse[j])
            if frozenset(expanded) in processed:
                merged_members.add(frozenset(c))
    return MergeResult(m, LargeFamily(m, frozenset(merged_members)), relabel, star)
