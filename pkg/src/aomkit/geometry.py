"""Exact rational hyperplane arrangements.

Feasibility of a sign pattern is decided by Fourier-Motzkin elimination over
:class:`fractions.Fraction`, carrying strictness through every combination.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core_sign import GroundSet, SignVector, all_keys
from .systems import SignSystem

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use int, str or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class Hyperplane:
    """``{x : normal . x = offset}``; the positive side is ``normal . x > offset``."""

    label: str
    normal: tuple[Fraction, ...]
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        normal = tuple(as_rational(c) for c in self.normal)
        if not any(normal):
            raise ValueError(f"hyperplane {self.label!r} has a zero normal")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", as_rational(self.offset))

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0)) - self.offset

    def sign(self, x: Sequence[Fraction]) -> int:
        v = self.value(x)
        return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    kind: str
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if self.kind not in ("central", "affine"):
            raise ValueError(f"kind must be 'central' or 'affine', not {self.kind!r}")
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))
        labels = [h.label for h in self.hyperplanes]
        if len(set(labels)) != len(labels):
            raise ValueError("hyperplane labels must be distinct")
        for h in self.hyperplanes:
            if len(h.normal) != self.dim:
                raise ValueError(f"hyperplane {h.label!r} has {len(h.normal)} coefficients, expected {self.dim}")
            if self.kind == "central" and h.offset != 0:
                raise ValueError(f"central arrangement has nonzero offset on {h.label!r}")

    @property
    def ground(self) -> GroundSet:
        return GroundSet(h.label for h in self.hyperplanes)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(h.label for h in self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)


def sign_at(arr: Arrangement, x: Sequence) -> SignVector:
    if len(x) != arr.dim:
        raise ValueError(f"point has dimension {len(x)}, arrangement has {arr.dim}")
    x = [as_rational(c) for c in x]
    plus = minus = 0
    for i, h in enumerate(arr.hyperplanes):
        s = h.sign(x)
        if s > 0:
            plus |= 1 << i
        elif s < 0:
            minus |= 1 << i
    return SignVector(arr.ground, plus, minus)


# --- Fourier-Motzkin ----------------------------------------------------------

# A constraint is (coeffs, rhs) meaning coeffs . x > rhs; equalities are kept apart.


def _normalize(coeffs: list[Fraction], rhs: Fraction):
    scale = next((abs(c) for c in coeffs if c), None)
    if scale is None or scale == 1:
        return tuple(coeffs), rhs
    return tuple(c / scale for c in coeffs), rhs / scale


def solve_strict_system(
    dim: int,
    strict: Iterable[tuple[Sequence[Fraction], Fraction]],
    equal: Iterable[tuple[Sequence[Fraction], Fraction]] = (),
) -> list[Fraction] | None:
    """A rational point with ``a.x > b`` for ``strict`` and ``a.x = b`` for ``equal``.

    Returns ``None`` when the system is infeasible.
    """
    ineqs = [(list(map(as_rational, a)), as_rational(b)) for a, b in strict]
    eqs = [(list(map(as_rational, a)), as_rational(b)) for a, b in equal]

    # Gaussian substitution of the equalities: x_k = (b - sum_{j != k} a_j x_j) / a_k
    substitutions: list[tuple[int, list[Fraction], Fraction]] = []
    while eqs:
        a, b = eqs.pop()
        k = next((i for i, c in enumerate(a) if c), None)
        if k is None:
            if b != 0:
                return None
            continue
        ak = a[k]
        expr = [-c / ak for c in a]
        expr[k] = Fraction(0)
        const = b / ak
        substitutions.append((k, expr, const))

        def subst(row, rhs):
            ck = row[k]
            if not ck:
                return row, rhs
            new = [r + ck * e for r, e in zip(row, expr)]
            new[k] = Fraction(0)
            return new, rhs - ck * const

        eqs = [subst(r, s) for r, s in eqs]
        ineqs = [subst(r, s) for r, s in ineqs]

    eliminated = {k for k, _, _ in substitutions}
    free_vars = [i for i in range(dim) if i not in eliminated]

    rows = {_normalize(r, s) for r, s in ineqs}
    history = []
    for k in free_vars:
        lower, upper, rest = [], [], []
        for r, s in rows:
            c = r[k]
            if c > 0:
                lower.append((r, s))
            elif c < 0:
                upper.append((r, s))
            else:
                rest.append((r, s))
        history.append((k, lower, upper))
        new_rows = set(rest)
        for rl, sl in lower:
            for ru, su in upper:
                # scale so the k coefficients cancel: rl/cl + ru/|cu|
                cl, cu = rl[k], -ru[k]
                comb = [a / cl + b / cu for a, b in zip(rl, ru)]
                comb[k] = Fraction(0)
                new_rows.add(_normalize(comb, sl / cl + su / cu))
        rows = new_rows
    for r, s in rows:
        if any(r):
            raise AssertionError("elimination left a variable behind")
        if not s < 0:
            return None

    x = [Fraction(0)] * dim
    for k, lower, upper in reversed(history):
        lo = hi = None
        for r, s in lower:
            bound = (s - sum((r[j] * x[j] for j in range(dim) if j != k), Fraction(0))) / r[k]
            lo = bound if lo is None or bound > lo else lo
        for r, s in upper:
            bound = (s - sum((r[j] * x[j] for j in range(dim) if j != k), Fraction(0))) / r[k]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            if not lo < hi:
                raise AssertionError("back substitution found an empty interval")
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = _nice_above(lo)
        elif hi is not None:
            x[k] = -_nice_above(-hi)
        else:
            x[k] = Fraction(0)
    for k, expr, const in reversed(substitutions):
        x[k] = const + sum((e * x[j] for j, e in enumerate(expr) if e), Fraction(0))
    return x


def _nice_above(lo: Fraction) -> Fraction:
    return Fraction(int(lo // 1) + 1)


def _pattern_constraints(arr: Arrangement, plus: int, minus: int):
    strict, equal = [], []
    for i, h in enumerate(arr.hyperplanes):
        if plus >> i & 1:
            strict.append((h.normal, h.offset))
        elif minus >> i & 1:
            strict.append((tuple(-c for c in h.normal), -h.offset))
        else:
            equal.append((h.normal, h.offset))
    return strict, equal


def feasible_point(arr: Arrangement, c: SignVector) -> list[Fraction] | None:
    """A rational point whose sign vector is ``c``, or ``None``."""
    if c.ground != arr.ground:
        raise ValueError("sign vector is not over the arrangement's labels")
    strict, equal = _pattern_constraints(arr, c.plus, c.minus)
    return solve_strict_system(arr.dim, strict, equal)


def feasible(arr: Arrangement, c: SignVector) -> bool:
    return feasible_point(arr, c) is not None


def enumerate_covectors(arr: Arrangement) -> SignSystem:
    """Every feasible sign pattern, found by testing all ``3**n`` candidates."""
    keys = []
    for plus, minus in all_keys(len(arr)):
        strict, equal = _pattern_constraints(arr, plus, minus)
        if solve_strict_system(arr.dim, strict, equal) is not None:
            keys.append((plus, minus))
    return SignSystem.from_keys(arr.ground, keys)


def embed_affine(arr: Arrangement, label: str = "g") -> Arrangement:
    """Homogenize: ``a.x = b`` becomes ``a.x - b x_g = 0`` plus the plane ``x_g = 0``."""
    if arr.kind != "affine":
        raise ValueError("embed_affine expects an affine arrangement")
    if label in arr.labels:
        raise ValueError(f"label {label!r} already used")
    hs = [Hyperplane(h.label, h.normal + (-h.offset,), 0) for h in arr.hyperplanes]
    hs.append(Hyperplane(label, (Fraction(0),) * arr.dim + (Fraction(1),), 0))
    return Arrangement(arr.dim + 1, "central", hs)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(map(as_rational, r)) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def check_regularity(arr: Arrangement) -> bool:
    """Whether some subfamily of hyperplanes meets in exactly one point.

    ``d`` hyperplanes with independent normals always meet in a single point,
    so this is a rank test on the normals.
    """
    return rank([h.normal for h in arr.hyperplanes]) == arr.dim


def _default_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"e{i}" for i in range(1, n + 1)]


def _parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    return rank([u, v]) < 2


def random_arrangement(
    seed: int,
    n: int,
    d: int,
    parallel_spec: Sequence[Iterable[str]] | None = None,
    kind: str = "affine",
    box: int = 3,
) -> Arrangement:
    """Seeded random arrangement with integer normals and offsets.

    ``parallel_spec`` partitions the labels ``a, b, c, ...`` into classes of
    parallel hyperplanes; distinct classes get non-parallel normals when
    ``d >= 2``. Central arrangements need singleton classes.
    """
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    labels = _default_labels(n)
    if parallel_spec is None:
        classes = [[lab] for lab in labels]
    else:
        classes = [list(c) for c in parallel_spec]
        flat = [lab for c in classes for lab in c]
        if sorted(flat) != sorted(labels) or any(not c for c in classes):
            raise ValueError(f"parallel_spec must partition the labels {labels}")
    if kind == "central" and any(len(c) > 1 for c in classes):
        raise ValueError("a central arrangement cannot have distinct parallel hyperplanes")
    for c in classes:
        # offsets/scale take at most 2 * (2 * box + 1) distinct values per class
        if len(c) > 2 * box + 1:
            raise ValueError(f"class {c} is too large for offsets in [-{box}, {box}]")

    rng = random.Random(seed)
    normals: list[list[int]] = []
    by_label: dict[str, Hyperplane] = {}
    for cls in classes:
        for _ in range(1000):
            normal = [rng.randint(-box, box) for _ in range(d)]
            if not any(normal):
                continue
            if d >= 2 and any(_parallel(normal, other) for other in normals):
                continue
            break
        else:
            raise ValueError("could not draw pairwise non-parallel normals; use fewer classes")
        normals.append(normal)
        used: set[Fraction] = set()
        for lab in cls:
            if kind == "central":
                scale, offset = 1, 0
            else:
                while True:
                    scale = rng.randint(1, 2)
                    offset = rng.randint(-box, box)
                    if Fraction(offset, scale) not in used:
                        break
            used.add(Fraction(offset, scale))
            by_label[lab] = Hyperplane(lab, tuple(scale * c for c in normal), offset)
    return Arrangement(d, kind, [by_label[lab] for lab in labels])


def planar_region_count(arr: Arrangement) -> int:
    """Number of regions of a line arrangement, ``1 + n + sum(m_p - 1)``.

    ``m_p`` is the number of lines through vertex ``p``. Requires pairwise
    distinct lines; computed from pairwise intersections only.
    """
    if arr.dim != 2:
        raise ValueError("planar region count needs a 2-dimensional arrangement")
    hs = arr.hyperplanes
    vertices: dict[tuple[Fraction, Fraction], set[int]] = {}
    for i in range(len(hs)):
        for j in range(i + 1, len(hs)):
            (a1, b1), c1 = hs[i].normal, hs[i].offset
            (a2, b2), c2 = hs[j].normal, hs[j].offset
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            p = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
            vertices.setdefault(p, set()).update((i, j))
    return 1 + len(hs) + sum(len(s) - 1 for s in vertices.values())
