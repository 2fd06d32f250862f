"""Finite sign-vector systems and the sets derived from them."""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator

from . import kernels
from .core_sign import (
    GroundSet,
    SignVector,
    all_keys,
    drop,
    lift,
    separation_mask,
)


class SignSystem:
    """A duplicate-free set of sign vectors over one ground set.

    Iteration order is lexicographic in the ``+-0`` serialization.
    """

    def __init__(self, ground: GroundSet, members: Iterable[SignVector] = ()):
        self.ground = ground
        ms = set()
        for v in members:
            if v.ground != ground:
                raise ValueError(f"member {v} is not over {ground!r}")
            ms.add(v)
        self._members = frozenset(ms)

    @classmethod
    def from_keys(cls, ground: GroundSet, keys: Iterable[tuple[int, int]]) -> SignSystem:
        return cls(ground, (SignVector(ground, p, m) for p, m in keys))

    @classmethod
    def from_strings(cls, ground: GroundSet | Iterable[str], texts: Iterable[str]) -> SignSystem:
        if not isinstance(ground, GroundSet):
            ground = GroundSet(ground)
        return cls(ground, (SignVector.from_string(ground, t) for t in texts))

    @cached_property
    def members(self) -> tuple[SignVector, ...]:
        return tuple(sorted(self._members, key=str))

    @cached_property
    def keys(self) -> frozenset[tuple[int, int]]:
        return frozenset(v.key for v in self._members)

    @cached_property
    def plus(self) -> list[int]:
        return [v.plus for v in self.members]

    @cached_property
    def minus(self) -> list[int]:
        return [v.minus for v in self.members]

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[SignVector]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self._members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignSystem):
            return NotImplemented
        return self.ground == other.ground and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.ground, self._members))

    def __repr__(self) -> str:
        return f"SignSystem({list(self.ground.labels)}, {self.strings()})"

    def strings(self) -> list[str]:
        return [str(v) for v in self.members]

    def union(self, other: SignSystem) -> SignSystem:
        return SignSystem(self.ground, self._members | other._members)

    def difference(self, other: Iterable[SignVector]) -> SignSystem:
        return SignSystem(self.ground, self._members - set(other))

    def intersection(self, other: Iterable[SignVector]) -> SignSystem:
        return SignSystem(self.ground, self._members & set(other))

    def __or__(self, other: SignSystem) -> SignSystem:
        return self.union(other)

    def __and__(self, other: SignSystem) -> SignSystem:
        return self.intersection(other)

    def __sub__(self, other: SignSystem) -> SignSystem:
        return self.difference(other)

    def __le__(self, other: SignSystem) -> bool:
        return self._members <= other._members

    def negated(self) -> SignSystem:
        return SignSystem(self.ground, (-v for v in self._members))

    def is_symmetric(self) -> bool:
        return all(-v in self._members for v in self._members)


def full_system(ground: GroundSet) -> SignSystem:
    return SignSystem.from_keys(ground, all_keys(len(ground)))


def sym(w: SignSystem) -> SignSystem:
    return SignSystem(w.ground, (v for v in w if -v in w))


def asym(w: SignSystem) -> SignSystem:
    return SignSystem(w.ground, (v for v in w if -v not in w))


def topes(w: SignSystem) -> SignSystem:
    """Members whose support is maximal under inclusion."""
    supports = {v.support_mask for v in w}
    maximal = {s for s in supports if not any(s != t and s & t == s for t in supports)}
    return SignSystem(w.ground, (v for v in w if v.support_mask in maximal))


# --- elimination sets ---------------------------------------------------------


def _agreeing(x: SignVector, y: SignVector, reference: SignVector, allowed: int):
    """All ``V`` equal to ``reference`` off ``S(x, y)`` and zero outside ``allowed``."""
    s = separation_mask(x, y)
    n = len(x.ground)
    base_p = reference.plus & ~s
    base_m = reference.minus & ~s
    free = [i for i in range(n) if s >> i & 1 and allowed >> i & 1]
    k = len(free)
    for code in range(3**k):
        p, m = base_p, base_m
        for i in free:
            code, r = divmod(code, 3)
            if r == 1:
                p |= 1 << i
            elif r == 2:
                m |= 1 << i
        yield SignVector(x.ground, p, m)


def _equal_support_pre(x: SignVector, y: SignVector) -> None:
    if x.support_mask != y.support_mask:
        raise ValueError(f"{x} and {y} do not have equal support")
    if x == y:
        raise ValueError("elimination sets require X != Y")


def _element_bit(x: SignVector, e: str | int) -> int:
    i = e if isinstance(e, int) else x.ground.index(e)
    return 1 << i


def elim_I_e(x: SignVector, y: SignVector, e: str | int) -> SignSystem:
    """``V`` with support inside ``supp(x) - {e}`` agreeing with ``x`` off ``S(x, y)``."""
    _equal_support_pre(x, y)
    bit = _element_bit(x, e)
    if not separation_mask(x, y) & bit:
        raise ValueError(f"{e!r} is not in the separation set of {x} and {y}")
    return SignSystem(x.ground, _agreeing(x, y, x, x.support_mask & ~bit))


def elim_I(x: SignVector, y: SignVector) -> SignSystem:
    _equal_support_pre(x, y)
    s = separation_mask(x, y)
    out: set[SignVector] = set()
    for i in range(len(x.ground)):
        if s >> i & 1:
            out.update(_agreeing(x, y, x, x.support_mask & ~(1 << i)))
    return SignSystem(x.ground, out)


def elim_B(x: SignVector, y: SignVector) -> SignSystem:
    """Equal-support vectors agreeing with ``x`` off ``S(x, y)``, other than ``x, y``."""
    _equal_support_pre(x, y)
    supp = x.support_mask
    return SignSystem(
        x.ground,
        (v for v in _agreeing(x, y, x, supp) if v.support_mask == supp and v != x and v != y),
    )


def elim_Iprime_e(x: SignVector, y: SignVector, e: str | int) -> SignSystem:
    s = separation_mask(x, y)
    if not s:
        return SignSystem(x.ground)
    bit = _element_bit(x, e)
    if not s & bit:
        raise ValueError(f"{e!r} is not in the separation set of {x} and {y}")
    allowed = (x.support_mask | y.support_mask) & ~bit
    return SignSystem(x.ground, _agreeing(x, y, x.compose(y), allowed))


def elim_Iprime(x: SignVector, y: SignVector) -> SignSystem:
    s = separation_mask(x, y)
    out: set[SignVector] = set()
    xy = x.compose(y)
    union = x.support_mask | y.support_mask
    for i in range(len(x.ground)):
        if s >> i & 1:
            out.update(_agreeing(x, y, xy, union & ~(1 << i)))
    return SignSystem(x.ground, out)


def meets_elimination(x: SignVector, y: SignVector, w: SignSystem) -> bool:
    """Whether ``I(x, y)`` (or ``I'(x, y)``) contains a member of ``w``."""
    return bool(kernels.elimination_cover(x.plus, x.minus, y.plus, y.minus, w.plus, w.minus))


# --- derived systems ----------------------------------------------------------


def parallel_vectors(w: SignSystem) -> SignSystem:
    """The parallel vectors ``P(W)``."""
    a = asym(w)
    sums = kernels.pair_sums(a.plus, a.minus, w.plus, w.minus, True)
    return SignSystem.from_keys(w.ground, sums)


def q_vectors(w: SignSystem) -> SignSystem:
    """``Q(W)``: like ``P(W)`` over all pairs, with extended elimination sets."""
    sums = kernels.pair_sums(w.plus, w.minus, w.plus, w.minus, False)
    return SignSystem.from_keys(w.ground, sums)


def _candidate_scan(ground: GroundSet, operands: SignSystem, target: SignSystem, symmetric: bool):
    cands = list(all_keys(len(ground)))
    cp = [c[0] for c in cands]
    cm = [c[1] for c in cands]
    keep = kernels.stabilizer_scan(
        cp, cm, operands.plus, operands.minus, target.plus, target.minus, symmetric
    )
    return SignSystem.from_keys(ground, (cands[k] for k in keep))


def stabilizer(w: SignSystem) -> SignSystem:
    """``N(W)``: all ``N`` with ``N o W`` and ``(-N) o W`` inside ``W``."""
    return _candidate_scan(w.ground, w, w, True)


def mandel_closure(t: SignSystem) -> SignSystem:
    """``{V : V o T subset of T}`` over all ``3**n`` candidates."""
    return _candidate_scan(t.ground, t, t, False)


def dagger(w: SignSystem, label: str = "g") -> SignSystem:
    """Lift ``W`` to the candidate oriented matroid on ``E + {label}``."""
    ground = w.ground.extend(label)
    pos = [lift(v, "+", label, ground) for v in w]
    neg = [lift(-v, "-", label, ground) for v in w]
    zero = [lift(v, "0", label, ground) for v in stabilizer(w)]
    return SignSystem(ground, pos + neg + zero)


def restrict_positive(o: SignSystem, label: str) -> SignSystem:
    """Members with ``+`` at ``label``, with that coordinate dropped."""
    bit = 1 << o.ground.index(label)
    ground = o.ground.without(label)
    return SignSystem(ground, (drop(v, label, ground) for v in o if v.plus & bit))


def zero_section(o: SignSystem, label: str) -> SignSystem:
    """Members with ``0`` at ``label``, with that coordinate dropped."""
    bit = 1 << o.ground.index(label)
    ground = o.ground.without(label)
    return SignSystem(ground, (drop(v, label, ground) for v in o if not v.support_mask & bit))
