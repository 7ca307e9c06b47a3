"""Finite permutations on the points ``0..k-1``.

Composition is a right action: ``p * q`` applies ``p`` first and then ``q``,
so the image of ``x`` under ``p * q`` is ``q(p(x))``. Point images are
written postfix in the maps literature (``x s t``), and this convention keeps
words such as ``s**2 * t`` reading left to right.

Human-facing cycle notation is 1-based: ``(1,2,3)(4,5)``; the identity
prints as ``()``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeMismatch, OutOfRange, RepeatedPoint

__all__ = [
    "Parity",
    "Permutation",
    "CycleDecomposition",
    "identity",
    "from_cycles",
    "compose",
    "inverse",
    "power",
    "cycle_decomposition",
    "parity",
    "order",
    "fixed_points",
    "parse_cycles",
    "format_cycles",
]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def __xor__(self, other: "Parity") -> "Parity":
        return Parity.EVEN if self is other else Parity.ODD


_set = object.__setattr__


class Permutation:
    """An immutable bijection of ``{0, ..., degree-1}``."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        k = len(imgs)
        seen = bytearray(k)
        for x in imgs:
            if not 0 <= x < k:
                raise OutOfRange(f"image {x} outside 0..{k - 1}")
            if seen[x]:
                raise RepeatedPoint(f"image {x} appears twice")
            seen[x] = 1
        _set(self, "_images", imgs)
        _set(self, "_hash", None)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        # skips validation; callers guarantee a bijection
        p = object.__new__(cls)
        _set(p, "_images", images)
        _set(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def images(self) -> tuple:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, x: int) -> int:
        return self._images[x]

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        if self._hash is None:
            _set(self, "_hash", hash(self._images))
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, e: int) -> "Permutation":
        return power(self, e)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._images))

    def conjugate(self, pi: "Permutation") -> "Permutation":
        """Return ``pi^-1 * self * pi``, i.e. self relabelled along ``pi``."""
        return compose(compose(inverse(pi), self), pi)

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self._images) if i != x]

    def cycles(self) -> list[list[int]]:
        return cycle_decomposition(self).cycles

    def cycle_type(self) -> list[int]:
        """Sorted lengths of the non-trivial cycles."""
        return sorted(len(c) for c in cycle_decomposition(self).cycles)

    def parity(self) -> Parity:
        return parity(self)

    def order(self) -> int:
        return order(self)

    def fixed_points(self) -> list[int]:
        return fixed_points(self)


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint-cycle form.

    Each cycle starts at its smallest point, cycles are sorted by that point,
    and fixed points are listed separately.
    """

    cycles: list
    fixed_points: list
    degree: int

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]


def identity(degree: int) -> Permutation:
    return Permutation._trusted(tuple(range(degree)))


def from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Permutation:
    """Product of disjoint cycles on ``degree`` points (0-based); unlisted points are fixed."""
    images = list(range(degree))
    used = set()
    for cyc in cycles:
        for x in cyc:
            if not 0 <= x < degree:
                raise OutOfRange(f"point {x} outside 0..{degree - 1}")
            if x in used:
                raise RepeatedPoint(f"point {x} repeated in cycle notation")
            used.add(x)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a] = b
    return Permutation._trusted(tuple(images))


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    _check_degrees(p, q)
    qi = q._images
    return Permutation._trusted(tuple([qi[x] for x in p._images]))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, x in enumerate(p._images):
        inv[x] = i
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, e: int) -> Permutation:
    if e < 0:
        p, e = inverse(p), -e
    # work cycle by cycle: the image of x is e steps along its cycle
    images = list(range(p.degree))
    for cyc in cycle_decomposition(p).cycles:
        n = len(cyc)
        step = e % n
        for j, x in enumerate(cyc):
            images[x] = cyc[(j + step) % n]
    return Permutation._trusted(tuple(images))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    imgs = p._images
    k = len(imgs)
    seen = bytearray(k)
    cycles, fixed = [], []
    for start in range(k):
        if seen[start]:
            continue
        if imgs[start] == start:
            seen[start] = 1
            fixed.append(start)
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cyc.append(x)
            x = imgs[x]
        cycles.append(cyc)
    return CycleDecomposition(cycles=cycles, fixed_points=fixed, degree=k)


def parity(p: Permutation) -> Parity:
    # a cycle of length L is a product of L-1 transpositions
    n_trans = sum(len(c) - 1 for c in cycle_decomposition(p).cycles)
    return Parity.EVEN if n_trans % 2 == 0 else Parity.ODD


def order(p: Permutation) -> int:
    return math.lcm(1, *(len(c) for c in cycle_decomposition(p).cycles))


def fixed_points(p: Permutation) -> list[int]:
    return [i for i, x in enumerate(p._images) if i == x]


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1,2,3)(4,5)"``.

    When ``degree`` is omitted the largest point mentioned is used.
    """
    stripped = re.sub(r"\s+", "", text)
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1)
        if body:
            cycles.append([int(tok) - 1 for tok in body.split(",")])
    if pos != len(stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    if degree is None:
        degree = max((x + 1 for c in cycles for x in c), default=0)
    return from_cycles(cycles, degree)


def format_cycles(p: Permutation, labels: Sequence[str] | None = None) -> str:
    """1-based cycle notation, or symbolic when ``labels[i]`` names point ``i``."""
    cycles = cycle_decomposition(p).cycles
    if not cycles:
        return "()"
    if labels is None:
        return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles)
    return "".join("(" + ",".join(labels[x] for x in c) + ")" for c in cycles)
