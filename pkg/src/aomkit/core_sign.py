"""Ternary sign vectors over a finite ordered ground set.

A sign vector is stored as two disjoint bitmasks: bit ``i`` of ``plus`` is set
when coordinate ``i`` is ``+`` and bit ``i`` of ``minus`` when it is ``-``.
Every operation here is a handful of bitwise instructions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_ELEMENTS = 24

SIGN_CHARS = "+-0"


class GroundSetMismatch(ValueError):
    """Raised when two sign vectors over different ground sets are combined."""


class GroundSet:
    """An ordered, duplicate-free tuple of element labels."""

    __slots__ = ("labels", "_index", "full")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(lab) for lab in labels)
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(lab for lab in labels if lab in seen or seen.add(lab))
            raise ValueError(f"duplicate ground set label {dup!r}")
        if len(labels) > MAX_ELEMENTS:
            raise ValueError(f"ground sets are limited to {MAX_ELEMENTS} elements")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self.full = (1 << len(labels)) - 1

    @classmethod
    def of_size(cls, n: int) -> GroundSet:
        """Ground set labelled ``1..n``."""
        return cls(str(i) for i in range(1, n + 1))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not in the ground set {list(self.labels)}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        """Labels of the bits set in ``mask``, in ground-set order."""
        return tuple(lab for i, lab in enumerate(self.labels) if mask >> i & 1)

    def extend(self, label: str) -> GroundSet:
        if label in self._index:
            raise ValueError(f"label {label!r} already in the ground set")
        return GroundSet(self.labels + (label,))

    def without(self, label: str) -> GroundSet:
        self.index(label)
        return GroundSet(lab for lab in self.labels if lab != label)


def _drop_bit(mask: int, i: int) -> int:
    low = mask & ((1 << i) - 1)
    return low | ((mask >> (i + 1)) << i)


class SignVector:
    """Immutable sign vector ``(plus, minus)`` over a :class:`GroundSet`."""

    __slots__ = ("ground", "plus", "minus")

    def __init__(self, ground: GroundSet, plus: int = 0, minus: int = 0):
        if plus & minus:
            raise ValueError("plus and minus sets must be disjoint")
        if (plus | minus) & ~ground.full:
            raise ValueError("sign vector has coordinates outside the ground set")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    def __setattr__(self, name, value):
        raise AttributeError("SignVector is immutable")

    @classmethod
    def zero(cls, ground: GroundSet) -> SignVector:
        return cls(ground, 0, 0)

    @classmethod
    def from_string(cls, ground: GroundSet, text: str) -> SignVector:
        if len(text) != len(ground):
            raise ValueError(
                f"sign string {text!r} has length {len(text)}, expected {len(ground)}"
            )
        plus = minus = 0
        for i, ch in enumerate(text):
            if ch == "+":
                plus |= 1 << i
            elif ch == "-":
                minus |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid sign character {ch!r} in {text!r}")
        return cls(ground, plus, minus)

    @classmethod
    def from_sets(cls, ground: GroundSet, plus: Iterable[str], minus: Iterable[str]) -> SignVector:
        return cls(ground, ground.mask(plus), ground.mask(minus))

    def __str__(self) -> str:
        out = []
        for i in range(len(self.ground)):
            bit = 1 << i
            out.append("+" if self.plus & bit else "-" if self.minus & bit else "0")
        return "".join(out)

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignVector):
            return NotImplemented
        return (
            self.plus == other.plus
            and self.minus == other.minus
            and self.ground == other.ground
        )

    def __hash__(self) -> int:
        return hash((self.plus, self.minus, len(self.ground)))

    def __lt__(self, other: SignVector) -> bool:
        return str(self) < str(other)

    def __getitem__(self, label: str) -> str:
        bit = 1 << self.ground.index(label)
        return "+" if self.plus & bit else "-" if self.minus & bit else "0"

    def __neg__(self) -> SignVector:
        return opposite(self)

    def __add__(self, other: SignVector) -> SignVector:
        return vector_sum(self, other)

    def __sub__(self, other: SignVector) -> SignVector:
        return vector_sum(self, opposite(other))

    def compose(self, other: SignVector) -> SignVector:
        return compose(self, other)

    @property
    def support_mask(self) -> int:
        return self.plus | self.minus

    @property
    def key(self) -> tuple[int, int]:
        return (self.plus, self.minus)

    def is_zero(self) -> bool:
        return not (self.plus | self.minus)


def _check(x: SignVector, y: SignVector) -> None:
    if x.ground is not y.ground and x.ground != y.ground:
        raise GroundSetMismatch(f"ground sets differ: {x.ground!r} vs {y.ground!r}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    """``x`` where nonzero, ``y`` elsewhere."""
    _check(x, y)
    free = ~(x.plus | x.minus)
    return SignVector(x.ground, x.plus | (y.plus & free), x.minus | (y.minus & free))


def opposite(x: SignVector) -> SignVector:
    return SignVector(x.ground, x.minus, x.plus)


def separation_mask(x: SignVector, y: SignVector) -> int:
    _check(x, y)
    return (x.plus & y.minus) | (x.minus & y.plus)


def separation(x: SignVector, y: SignVector) -> tuple[str, ...]:
    """Labels where ``x`` and ``y`` carry opposite nonzero signs."""
    return x.ground.labels_of(separation_mask(x, y))


def vector_sum(x: SignVector, y: SignVector) -> SignVector:
    """Composition of ``x`` and ``y`` with the separation set zeroed."""
    s = separation_mask(x, y)
    c = compose(x, y)
    return SignVector(x.ground, c.plus & ~s, c.minus & ~s)


def support(x: SignVector) -> tuple[str, ...]:
    return x.ground.labels_of(x.plus | x.minus)


def zero_set(x: SignVector) -> tuple[str, ...]:
    return x.ground.labels_of(x.ground.full & ~(x.plus | x.minus))


def _subset_mask(ground: GroundSet, labels: Iterable[str]) -> int:
    try:
        return ground.mask(labels)
    except KeyError as exc:
        raise ValueError(f"not a subset of the ground set: {exc}") from None


def restrict(x: SignVector, labels: Iterable[str]) -> SignVector:
    """Zero every coordinate outside ``labels``; the ground set is kept."""
    a = _subset_mask(x.ground, labels)
    return SignVector(x.ground, x.plus & a, x.minus & a)


def reorient(x: SignVector, labels: Iterable[str]) -> SignVector:
    a = _subset_mask(x.ground, labels)
    keep = ~a
    return SignVector(
        x.ground, (x.plus & keep) | (x.minus & a), (x.minus & keep) | (x.plus & a)
    )


def conforms(x: SignVector, y: SignVector) -> bool:
    """Sign order test ``x <= y``: every nonzero sign of ``x`` reappears in ``y``."""
    _check(x, y)
    return not (x.plus & ~y.plus) and not (x.minus & ~y.minus)


def lift(x: SignVector, sign: str, label: str = "g", ground: GroundSet | None = None) -> SignVector:
    """Append a coordinate ``label`` carrying ``sign``.

    ``ground`` may be passed to reuse an already extended ground set.
    """
    if ground is None:
        ground = x.ground.extend(label)
    elif ground.labels != x.ground.labels + (label,):
        raise ValueError("extended ground set does not match")
    bit = 1 << len(x.ground)
    if sign == "+":
        return SignVector(ground, x.plus | bit, x.minus)
    if sign == "-":
        return SignVector(ground, x.plus, x.minus | bit)
    if sign == "0":
        return SignVector(ground, x.plus, x.minus)
    raise ValueError(f"invalid sign {sign!r}")


def drop(x: SignVector, label: str, ground: GroundSet | None = None) -> SignVector:
    """Remove coordinate ``label`` from the ground set."""
    i = x.ground.index(label)
    if ground is None:
        ground = x.ground.without(label)
    return SignVector(ground, _drop_bit(x.plus, i), _drop_bit(x.minus, i))


def all_vectors(ground: GroundSet) -> Iterator[SignVector]:
    """All ``3**n`` sign vectors over ``ground``."""
    for plus, minus in all_keys(len(ground)):
        yield SignVector(ground, plus, minus)


def all_keys(n: int) -> Iterator[tuple[int, int]]:
    """All ``(plus, minus)`` pairs with disjoint masks on ``n`` bits."""
    full = (1 << n) - 1
    for supp in range(full + 1):
        # iterate sub-masks of supp as the plus part
        sub = supp
        while True:
            yield sub, supp & ~sub
            if sub == 0:
                break
            sub = (sub - 1) & supp


def key_string(plus: int, minus: int, n: int) -> str:
    return "".join(
        "+" if plus >> i & 1 else "-" if minus >> i & 1 else "0" for i in range(n)
    )


def parse_vectors(ground: GroundSet, texts: Sequence[str]) -> list[SignVector]:
    return [SignVector.from_string(ground, t) for t in texts]
