"""Finite permutation groups on a fixed point set.

Permutations are image tuples: p[i] is where point i goes.  Products are
left actions, mul(p, q)[i] = p[q[i]], so (p*q) acts by q first.  Group
order and membership come from a deterministic Schreier-Sims stabilizer
chain; orders are plain Python ints, hence arbitrary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

Perm = tuple[int, ...]


class NotPrime(ValueError):
    pass


@dataclass(frozen=True)
class Overflow:
    """Enumeration declined: the group order exceeds the requested cap."""

    order: int


@dataclass(frozen=True)
class Infeasible:
    """Exact computation declined under the configured caps."""

    reason: str


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def element_order(p: Perm) -> int:
    """Least m >= 1 with p^m = identity (lcm of cycle lengths)."""
    n = len(p)
    seen = [False] * n
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        order = math.lcm(order, length)
    return order


def perm_power(p: Perm, k: int) -> Perm:
    if k < 0:
        return perm_power(inverse(p), -k)
    result = identity(len(p))
    base = p
    while k:
        if k & 1:
            result = mul(base, result)
        base = mul(base, base)
        k >>= 1
    return result


class _ChainLevel:
    __slots__ = ("base", "gens", "transversal", "processed")

    def __init__(self, base: int, ident: Perm):
        self.base = base
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {base: ident}
        self.processed: set[tuple[int, Perm]] = set()


class PermutationGroup:
    """Group generated by permutations of {0, ..., degree-1}.

    The stabilizer chain (base and strong generating set) is built eagerly
    at construction, so instances are immutable afterwards and safe for
    concurrent reads.  Generators stored at level i fix the base points of
    all earlier levels; the generating set of the i-th stabilizer is the
    union of the generators at levels i and deeper.
    """

    def __init__(self, degree: int, generators: list[Perm]):
        self.degree = degree
        self._identity = identity(degree)
        gens = []
        for g in generators:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation")
            g = tuple(g)
            if g != self._identity and g not in gens:
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._levels: list[_ChainLevel] = []
        for g in self.generators:
            self._add_generator(g, 0)
        self._complete(0)

    # --- Schreier-Sims ---------------------------------------------------

    def _gens_from(self, i: int) -> list[Perm]:
        return [g for level in self._levels[i:] for g in level.gens]

    def _add_generator(self, p: Perm, slot: int):
        """Store p at chain position slot; p must fix the bases above."""
        if slot == len(self._levels):
            base = next(i for i, x in enumerate(p) if x != i)
            self._levels.append(_ChainLevel(base, self._identity))
        self._levels[slot].gens.append(p)

    def _extend_transversal(self, i: int):
        """Grow the orbit of base_i under the i-th stabilizer generators,
        keeping existing coset representatives stable."""
        level = self._levels[i]
        gens = self._gens_from(i)
        frontier = sorted(level.transversal)
        while frontier:
            nxt = []
            for pt in frontier:
                rep = level.transversal[pt]
                for g in gens:
                    img = g[pt]
                    if img not in level.transversal:
                        level.transversal[img] = mul(g, rep)
                        nxt.append(img)
            frontier = nxt

    def _sift_from(self, p: Perm, start: int) -> tuple[Perm, int]:
        """Reduce p through levels start.. ; returns (residue, stop level)."""
        for i in range(start, len(self._levels)):
            level = self._levels[i]
            img = p[level.base]
            if img == level.base:
                continue
            rep = level.transversal.get(img)
            if rep is None:
                return p, i
            p = mul(inverse(rep), p)
        return p, len(self._levels)

    def _complete(self, i: int):
        """Establish the Schreier condition at level i and below: every
        Schreier generator of level i sifts to the identity."""
        if i >= len(self._levels):
            return
        level = self._levels[i]
        while True:
            self._extend_transversal(i)
            added = False
            for pt in sorted(level.transversal):
                rep = level.transversal[pt]
                for g in self._gens_from(i):
                    key = (pt, g)
                    if key in level.processed:
                        continue
                    level.processed.add(key)
                    schreier = mul(inverse(level.transversal[g[pt]]), mul(g, rep))
                    if schreier == self._identity:
                        continue
                    residue, _ = self._sift_from(schreier, i + 1)
                    if residue != self._identity:
                        self._add_generator(residue, i + 1)
                        self._complete(i + 1)
                        added = True
                        break
                if added:
                    break
            if not added:
                return

    def _sift(self, p: Perm) -> tuple[Perm, int]:
        return self._sift_from(p, 0)

    # --- queries ---------------------------------------------------------

    def order(self) -> int:
        n = 1
        for level in self._levels:
            n *= len(level.transversal)
        return n

    def contains(self, p: Perm) -> bool:
        if len(p) != self.degree:
            return False
        residue, _ = self._sift(p)
        return residue == identity(self.degree)

    def enumerate_elements(self, cap: int) -> list[Perm] | Overflow:
        """All elements in deterministic BFS order, or Overflow(|G|)."""
        if cap < 1:
            raise ValueError("cap must be >= 1")
        n = self.order()
        if n > cap:
            return Overflow(order=n)
        ident = identity(self.degree)
        seen = {ident}
        out = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = mul(g, p)
                    if q not in seen:
                        seen.add(q)
                        out.append(q)
                        nxt.append(q)
            frontier = nxt
        assert len(out) == n, "enumeration disagrees with stabilizer chain"
        return out

    def random_element(self, rng: Random, word_length: int = 10) -> Perm:
        if not self.generators:
            return identity(self.degree)
        p = identity(self.degree)
        for _ in range(rng.randint(1, word_length)):
            g = rng.choice(self.generators)
            if rng.random() < 0.5:
                g = inverse(g)
            p = mul(g, p)
        return p


def cyclic_subgroups(
    group: PermutationGroup,
    cap: int,
    seed: int = 0,
    word_budget: int = 1200,
    max_word_length: int = 12,
    max_subgroups: int = 400,
) -> tuple[list[tuple[Perm, int]], bool]:
    """One representative generator per distinct cyclic subgroup.

    If |G| <= cap the list is complete (deduplicated over all elements,
    in deterministic enumeration order).  Otherwise representatives come
    from seeded random words in the generators, bounded by word_budget /
    max_word_length / max_subgroups, and the second return value is False
    to flag the scan as incomplete.  Every prime-power power of a found
    element is included, so a single order-10 element also contributes
    its order-2 and order-5 subgroups.
    """
    elements: list[Perm]
    enum = group.enumerate_elements(cap)
    if isinstance(enum, Overflow):
        complete = False
        rng = Random(seed)
        pool: list[Perm] = list(group.generators)
        for _ in range(word_budget):
            pool.append(group.random_element(rng, max_word_length))
        elements = pool
    else:
        complete = True
        elements = enum

    found: dict[frozenset[Perm], tuple[Perm, int]] = {}
    ident = identity(group.degree)
    found[frozenset([ident])] = (ident, 1)
    for p in elements:
        for q, m in _prime_power_parts(p):
            if not complete and len(found) >= max_subgroups:
                return sorted(found.values(), key=lambda t: (t[1], t[0])), False
            powers = [ident]
            cur = q
            while cur != ident:
                powers.append(cur)
                cur = mul(q, cur)
            key = frozenset(powers)
            if key not in found:
                found[key] = (q, m)
    return sorted(found.values(), key=lambda t: (t[1], t[0])), complete


def _prime_power_parts(p: Perm) -> list[tuple[Perm, int]]:
    """The element itself plus one generator per prime-power part of it."""
    m = element_order(p)
    out = [(p, m)]
    for prime, e in _factor(m).items():
        q = perm_power(p, m // prime**e)
        out.append((q, prime**e))
    return out


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and _factor(p) == {p: 1}


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def sylow_subgroup(
    group: PermutationGroup, p: int, cap: int, seed: int = 0
) -> PermutationGroup | Infeasible:
    """A Sylow p-subgroup, by enumerating elements and growing a p-subgroup
    by closure until its order reaches the p-part of |G|.

    Randomized growth with restarts; the order condition certifies the
    result, so randomness can only cost retries, never correctness.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    order = group.order()
    target = p_part(order, p)
    ident = identity(group.degree)
    if target == 1:
        return PermutationGroup(group.degree, [])
    elements = group.enumerate_elements(cap)
    if isinstance(elements, Overflow):
        return Infeasible(f"|G| = {elements.order} exceeds enumeration cap {cap}")
    candidates = []
    for q in elements:
        m = element_order(q)
        if m > 1 and _factor(m).keys() == {p}:
            candidates.append(q)
    rng = Random(seed)
    for _attempt in range(200):
        current: set[Perm] = {ident}
        gens: list[Perm] = []
        stuck = 0
        while len(current) < target and stuck < 80:
            q = rng.choice(candidates)
            if q in current:
                stuck += 1
                continue
            closed = _bounded_closure(current | {q}, gens + [q], target)
            if closed is None:
                stuck += 1
                continue
            current = closed
            gens.append(q)
        if len(current) == target:
            sub = PermutationGroup(group.degree, gens)
            assert sub.order() == target
            return sub
    raise RuntimeError("Sylow growth failed to converge")  # pragma: no cover


def _bounded_closure(
    seed_elements: set[Perm], gens: list[Perm], limit: int
) -> set[Perm] | None:
    """Close seed_elements under the generators; None if size passes limit."""
    out = set(seed_elements)
    frontier = list(seed_elements)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(g, x)
            if y not in out:
                if len(out) + 1 > limit:
                    return None
                out.add(y)
                frontier.append(y)
    return out


def orbits(degree: int, generators: list[Perm], points: list[int]) -> list[list[int]]:
    """Orbits of the given points under the generated group, each sorted,
    ordered by smallest member."""
    remaining = set(points)
    out = []
    for start in sorted(points):
        if start not in remaining:
            continue
        orb = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        out.append(sorted(orb))
        remaining -= orb
    return out
