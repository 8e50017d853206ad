"""Tuples of cycles realizing genus-0 covers with prescribed ramification orders.

Permutations act on the symbols 1..k.  Products compose LEFT TO RIGHT: the
product of (s1, s2, ..., sn) applies s1 first.  The two merge identities used
by the inductive construction are only valid under this convention, so it is
fixed package-wide.

A profile (k, (e_1..e_n)) is *balanced* when sum(e_i - 1) = 2(k - 1), the
genus-0 case of Riemann-Hurwitz when the e_i are the orders of the only
nonsimple ramification.  construct_tuple produces, for every balanced profile,
cycles of the prescribed orders whose product is the identity, generating a
transitive group, with consecutive cycles sharing a symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations as iter_permutations

from .errors import ProfileInfeasible, ResourceLimit


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..k}, stored as the tuple of images of 1, 2, ..., k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycle(cls, symbols, k: int) -> "Permutation":
        """The cycle sending symbols[i] to symbols[i+1] (and the last to the first)."""
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"repeated symbol in cycle {symbols}")
        images = list(range(1, k + 1))
        for s in symbols:
            if not 1 <= s <= k:
                raise ValueError(f"symbol {s} outside 1..{k}")
        for a, b in zip(symbols, symbols[1:] + symbols[:1]):
            images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, s: int) -> int:
        return self.images[s - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: apply self first, then other."""
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    __mul__ = then

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == i + 1 for i, img in enumerate(self.images))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, img in enumerate(self.images) if img != i + 1)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated minimum-first, sorted by minimum."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen or self.apply(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.apply(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.apply(nxt)
            out.append(tuple(cyc))
        return tuple(out)

    def single_cycle(self) -> tuple[int, ...] | None:
        """The unique nontrivial cycle if there is exactly one, else None."""
        cycs = self.cycles()
        return cycs[0] if len(cycs) == 1 else None

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def orbit_count(self) -> int:
        """Number of orbits on 1..k, fixed points included."""
        return len(self.cycles()) + (len(self.images) - len(self.support))


@dataclass(frozen=True)
class MonodromyTuple:
    """An ordered tuple of single cycles in the symmetric group on 1..k."""

    k: int
    cycles: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        for sigma in self.cycles:
            if sigma.degree != self.k:
                raise ValueError("all cycles must act on the same 1..k")
            if sigma.single_cycle() is None:
                raise ValueError(f"not a single cycle: {sigma.images}")

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(sigma.single_cycle()) for sigma in self.cycles)

    def product(self) -> Permutation:
        out = Permutation.identity(self.k)
        for sigma in self.cycles:
            out = out.then(sigma)
        return out

    def to_json_dict(self) -> dict:
        return {"k": self.k, "cycles": [list(s.single_cycle()) for s in self.cycles]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "MonodromyTuple":
        k = int(data["k"])
        cycles = tuple(Permutation.from_cycle(c, k) for c in data["cycles"])
        return cls(k=k, cycles=cycles)


@dataclass(frozen=True)
class TupleReport:
    product_is_identity: bool
    transitive: bool
    consecutive_nondisjoint: bool
    orders: tuple[int, ...]
    genus: int | None


def _validate_orders(k: int, e) -> tuple[int, ...]:
    e = tuple(int(v) for v in e)
    if k < 2:
        raise ValueError("degree k must be at least 2")
    for ei in e:
        if not 2 <= ei <= k:
            raise ProfileInfeasible(f"order {ei} outside 2..k={k}")
    return e


def is_balanced(k: int, e) -> bool:
    return sum(ei - 1 for ei in e) == 2 * (k - 1)


def pad_profile(k: int, e) -> tuple[int, ...]:
    """Append simple orders (2's) until the profile is balanced."""
    e = _validate_orders(k, e)
    deficit = 2 * (k - 1) - sum(ei - 1 for ei in e)
    if deficit < 0:
        raise ProfileInfeasible(
            f"sum(e_i - 1) = {sum(ei - 1 for ei in e)} already exceeds 2(k-1) = {2 * (k - 1)}"
        )
    return e + (2,) * deficit


def _rotate_start(cycle: tuple[int, ...], x: int) -> tuple[int, ...]:
    i = cycle.index(x)
    return cycle[i:] + cycle[:i]


def _rotate_end(cycle: tuple[int, ...], x: int) -> tuple[int, ...]:
    i = cycle.index(x)
    return cycle[i + 1:] + cycle[:i + 1]


def _construct(k: int, e: list[int]) -> list[tuple[int, ...]]:
    # invariant: 2 <= e_i <= k and sum(e_i - 1) == 2(k - 1)
    n = len(e)
    if all(ei == 2 for ei in e):
        # then n = 2k - 2: adjacent transpositions up and back down
        half = [(j, j + 1) for j in range(1, k)]
        return half + half[::-1]
    m = e.index(max(e))  # max >= 3 here
    lo, hi = (m, m + 1) if m < n - 1 else (m - 1, m)
    other = hi if m == lo else lo
    if e[other] >= 3:
        # shrink both entries of the adjacent pair, then regrow them through a
        # fresh symbol k shared at a common point x of the two smaller cycles
        e2 = list(e)
        e2[lo] -= 1
        e2[hi] -= 1
        sub = _construct(k - 1, e2)
        x = min(set(sub[lo]) & set(sub[hi]))
        sub[lo] = _rotate_start(sub[lo], x) + (k,)
        sub[hi] = (k,) + _rotate_end(sub[hi], x)
        return sub
    # e[other] == 2: drop it, shrink the max, reinsert as the transposition (k x)
    e2 = [e[i] - 1 if i == m else e[i] for i in range(n) if i != other]
    sub = _construct(k - 1, e2)
    mm = m if m < other else m - 1
    far = mm + 1 if other > m else mm - 1
    if 0 <= far < len(sub):
        x = min(set(sub[mm]) & set(sub[far]))
    else:
        x = min(sub[mm])
    if other > m:
        sub[mm] = _rotate_start(sub[mm], x) + (k,)
    else:
        rot = _rotate_start(sub[mm], x)
        sub[mm] = (rot[0], k) + rot[1:]
    sub.insert(other, (k, x))
    return sub


def construct_tuple(k: int, e) -> MonodromyTuple:
    """Cycles of orders e_1..e_n with identity product, transitive, chain-linked.

    Requires a balanced profile.  Deterministic; the construction reduces the
    first maximal order together with an adjacent one and works in the caller's
    order throughout, so consecutive nondisjointness holds as returned.
    """
    e = _validate_orders(k, e)
    if not is_balanced(k, e):
        raise ProfileInfeasible(
            f"profile not balanced: sum(e_i - 1) = {sum(ei - 1 for ei in e)}, "
            f"need 2(k-1) = {2 * (k - 1)}"
        )
    cycles = _construct(k, list(e))
    perms = tuple(Permutation.from_cycle(c, k) for c in cycles)
    return MonodromyTuple(k=k, cycles=perms)


def _transitive(k: int, perms) -> bool:
    if k == 0:
        return False
    parent = list(range(k + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for sigma in perms:
        for s in range(1, k + 1):
            ra, rb = find(s), find(sigma.apply(s))
            if ra != rb:
                parent[ra] = rb
    return len({find(s) for s in range(1, k + 1)}) == 1


def verify_tuple(mt: MonodromyTuple) -> TupleReport:
    """Check the three defining conditions and report the Riemann-Hurwitz genus.

    genus solves 2 - 2g = 2k - sum(order_i - 1); it is None when that value is
    odd (possible only when the product is not the identity) and may be
    negative for infeasible tuples, which keeps them diagnosable.
    """
    orders = mt.orders
    weight = sum(o - 1 for o in orders)
    twice_genus = weight - 2 * (mt.k - 1)
    nondisjoint = all(
        a.support & b.support for a, b in zip(mt.cycles, mt.cycles[1:])
    )
    return TupleReport(
        product_is_identity=mt.product().is_identity(),
        transitive=_transitive(mt.k, mt.cycles),
        consecutive_nondisjoint=bool(nondisjoint),
        orders=orders,
        genus=twice_genus // 2 if twice_genus % 2 == 0 else None,
    )


def _cycles_of_order(k: int, e: int) -> list[Permutation]:
    """All e-cycles in the symmetric group on 1..k, sorted by image tuple."""
    out = []
    for supp in combinations(range(1, k + 1), e):
        first, rest = supp[0], supp[1:]
        for arrangement in iter_permutations(rest):
            out.append(Permutation.from_cycle((first,) + arrangement, k))
    out.sort()
    return out


def _cayley_distance(p: Permutation) -> int:
    """Least number of transpositions whose product is p."""
    return p.degree - p.orbit_count()


def enumerate_tuples(
    k: int,
    e,
    exhaustive: bool = False,
    max_k: int = 6,
    max_n: int = 6,
) -> list[MonodromyTuple]:
    """All cycle tuples of the given orders with identity product and transitivity.

    Nondisjointness of consecutive cycles is NOT required here.  Results come in
    lexicographic order of the concatenated image tuples.  The default search
    solves the last position from the partial product and prunes on Cayley
    distance and parity; exhaustive=True disables every shortcut and filters the
    full product space (ground-truth oracle for tests).
    """
    e = _validate_orders(k, e)
    if k > max_k or len(e) > max_n:
        raise ResourceLimit(f"k={k}, n={len(e)} beyond guard k<={max_k}, n<={max_n}")
    candidates = [_cycles_of_order(k, ei) for ei in e]
    results: list[MonodromyTuple] = []

    if exhaustive:
        def walk_all(pos: int, chosen: list[Permutation]):
            if pos == len(e):
                prod = Permutation.identity(k)
                for sigma in chosen:
                    prod = prod.then(sigma)
                if prod.is_identity() and _transitive(k, chosen):
                    results.append(MonodromyTuple(k=k, cycles=tuple(chosen)))
                return
            for sigma in candidates[pos]:
                chosen.append(sigma)
                walk_all(pos + 1, chosen)
                chosen.pop()

        walk_all(0, [])
        return results

    n = len(e)

    def walk(pos: int, prefix: Permutation, chosen: list[Permutation]):
        if pos == n - 1:
            last = prefix.inverse()
            cyc = last.single_cycle()
            if cyc is not None and len(cyc) == e[pos]:
                full = chosen + [last]
                if _transitive(k, full):
                    results.append(MonodromyTuple(k=k, cycles=tuple(full)))
            return
        capacity = sum(ei - 1 for ei in e[pos + 1:])
        for sigma in candidates[pos]:
            nxt = prefix.then(sigma)
            dist = _cayley_distance(nxt)
            if dist > capacity or (capacity - dist) % 2 != 0:
                continue
            chosen.append(sigma)
            walk(pos + 1, nxt, chosen)
            chosen.pop()

    walk(0, Permutation.identity(k), [])
    return results


def count_tuples(k: int, e, max_k: int = 6, max_n: int = 6) -> int:
    """Number of tuples enumerate_tuples would return, via conjugation symmetry.

    The count of solutions with a prescribed first cycle is constant on the
    conjugacy class (simultaneous conjugation preserves all three conditions),
    so the total is that count times the number of e_1-cycles.
    """
    e = _validate_orders(k, e)
    if k > max_k or len(e) > max_n:
        raise ResourceLimit(f"k={k}, n={len(e)} beyond guard k<={max_k}, n<={max_n}")
    if len(e) == 1:
        return 0
    first = Permutation.from_cycle(tuple(range(1, e[0] + 1)), k)
    class_size = math.factorial(k) // (e[0] * math.factorial(k - e[0]))
    candidates = [_cycles_of_order(k, ei) for ei in e]
    n = len(e)
    hits = 0

    def walk(pos: int, prefix: Permutation, chosen: list[Permutation]):
        nonlocal hits
        if pos == n - 1:
            last = prefix.inverse()
            cyc = last.single_cycle()
            if cyc is not None and len(cyc) == e[pos]:
                if _transitive(k, chosen + [last]):
                    hits += 1
            return
        capacity = sum(ei - 1 for ei in e[pos + 1:])
        for sigma in candidates[pos]:
            nxt = prefix.then(sigma)
            dist = _cayley_distance(nxt)
            if dist > capacity or (capacity - dist) % 2 != 0:
                continue
            chosen.append(sigma)
            walk(pos + 1, nxt, chosen)
            chosen.pop()

    walk(1, first, [first])
    return hits * class_size
