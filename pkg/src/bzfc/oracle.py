"""Brute-force reference for the size comparisons.

Same-size and at-most-size are defined by searching for a counting (an
injective relabeling of the realm) whose image equals, or lands inside,
the other set.  The search space is a proper class in principle; here
the codomain is cut down to the other set's realm plus a pool of fresh
pebbles.  Any counting can be relabeled into such a codomain without
changing the equality or inclusion verdicts, so nothing is lost; the
pool-sufficiency check in the test suite probes this empirically.

This module exists to validate the closed forms in ``numerosity`` and
is deliberately naive: no memoization, no symmetry pruning, just the
definitions and a factorial guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GuardExceeded, PoolTooSmall
from .sets import Atom, ClassicalFn, Element, NCSet
from .truth import TruthValue

MAX_REALM_SIZE = 4


@dataclass(frozen=True)
class PebblePool:
    """Fresh atoms, disjoint from the realms they will count."""

    atoms: tuple[Atom, ...]

    @classmethod
    def for_sets(cls, a: NCSet, b: NCSet, size: int | None = None) -> "PebblePool":
        taken = a.realm | b.realm
        if size is None:
            size = len(a.realm) + len(b.realm)
        fresh: list[Atom] = []
        i = 1
        while len(fresh) < size:
            candidate = Atom(f"p{i}")
            if candidate not in taken:
                fresh.append(candidate)
            i += 1
        return cls(tuple(fresh))


def enumerate_countings(a: NCSet, codomain: Iterable[Element] | PebblePool) -> Iterator[ClassicalFn]:
    """All injections from the realm of ``a`` into the codomain."""
    targets = codomain.atoms if isinstance(codomain, PebblePool) else tuple(codomain)
    realm = sorted(a.realm, key=str)
    if len(targets) < len(realm):
        raise PoolTooSmall(
            f"codomain of {len(targets)} cannot count a realm of {len(realm)}")
    for chosen in itertools.permutations(targets, len(realm)):
        yield ClassicalFn(zip(realm, chosen))


def _guard(a: NCSet, b: NCSet) -> None:
    biggest = max(len(a.realm), len(b.realm))
    if biggest > MAX_REALM_SIZE:
        raise GuardExceeded(
            f"realm size {biggest} exceeds brute-force limit {MAX_REALM_SIZE}")


def _search(a: NCSet, b: NCSet, relate, extra_pebbles: int) -> TruthValue:
    _guard(a, b)
    pool = PebblePool.for_sets(a, b, size=len(a.realm) + len(b.realm) + extra_pebbles)
    codomain = sorted(b.realm, key=str) + list(pool.atoms)
    assertable = False
    deniable = True
    for counting in enumerate_countings(a, codomain):
        verdict = relate(counting.image(a), b)
        assertable = assertable or verdict.assertable
        deniable = deniable and verdict.deniable
        if assertable and not deniable:
            break
    return TruthValue(assertable, deniable)


def cong_brute(a: NCSet, b: NCSet, extra_pebbles: int = 0) -> TruthValue:
    """Equinumerosity by search: true when some counting of ``a`` tallies
    to exactly ``b``; false when every counting's tally differs."""
    return _search(a, b, NCSet.eq_tv, extra_pebbles)


def preceq_brute(a: NCSet, b: NCSet, extra_pebbles: int = 0) -> TruthValue:
    """Size-at-most by search, with inclusion in place of equality."""
    return _search(a, b, NCSet.subset_tv, extra_pebbles)
