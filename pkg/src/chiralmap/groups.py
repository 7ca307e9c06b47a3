"""What group do a few permutations generate?

Transitivity, primitivity (block systems), exact order through a
stabilizer chain, and recognition of the alternating or symmetric group from
a single-cycle element with at least three fixed points inside a primitive
group (Jordan's theorem, and Jones' extension to cycles of any length).
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import _accel
from .errors import DegreeMismatch, DegreeTooLarge, GroupTooLarge, NotTransitive
from .perm import Parity, Permutation, compose, cycle_decomposition, inverse, parity, power

__all__ = [
    "BlockSystem",
    "PrimitivityResult",
    "Word",
    "JordanWitness",
    "Verdict",
    "GroupClassification",
    "StabilizerChain",
    "orbits",
    "is_transitive",
    "is_primitive",
    "group_order",
    "cayley_order",
    "default_word_pool",
    "find_jordan_witness",
    "classify",
    "degree_cap",
]

DEFAULT_DEGREE_CAP = 64


def degree_cap() -> int:
    """Degree limit for exact order computation; ``CHIRALMAP_DEGREE_CAP`` overrides it."""
    return int(os.environ.get("CHIRALMAP_DEGREE_CAP", DEFAULT_DEGREE_CAP))


def _degree(gens: Sequence[Permutation]) -> int:
    if not gens:
        raise ValueError("need at least one generator")
    k = gens[0].degree
    for g in gens[1:]:
        if g.degree != k:
            raise DegreeMismatch(f"generator degrees differ: {k} vs {g.degree}")
    return k


def orbits(gens: Sequence[Permutation]) -> list[list[int]]:
    """Orbits of ``<gens>``, each sorted, listed by smallest point."""
    k = _degree(gens)
    imgs = [g.images for g in gens]
    seen = bytearray(k)
    out = []
    for start in range(k):
        if seen[start]:
            continue
        seen[start] = 1
        orb = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for im in imgs:
                y = im[x]
                if not seen[y]:
                    seen[y] = 1
                    orb.append(y)
                    stack.append(y)
        out.append(sorted(orb))
    return out


def is_transitive(gens: Sequence[Permutation]) -> bool:
    return len(orbits(gens)) == 1


# --- primitivity -----------------------------------------------------------


@dataclass(frozen=True)
class BlockSystem:
    block_of: tuple  # point -> block id, ids numbered by first point
    num_blocks: int

    @property
    def degree(self) -> int:
        return len(self.block_of)

    def blocks(self) -> list[list[int]]:
        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return out

    def is_preserved_by(self, g: Permutation) -> bool:
        """True when ``g`` maps every block onto a block."""
        target: dict[int, int] = {}
        for x, b in enumerate(self.block_of):
            gb = self.block_of[g(x)]
            if target.setdefault(b, gb) != gb:
                return False
        return True

    def is_nontrivial(self) -> bool:
        return 1 < self.num_blocks < self.degree


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    blocks: BlockSystem | None = None

    def __bool__(self) -> bool:
        return self.primitive


def _minimal_block_system(imgs: list[tuple], k: int, a: int, b: int) -> BlockSystem:
    """Finest system of imprimitivity with ``a`` and ``b`` in one block."""
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a, b)]
    parent[find(b)] = find(a)
    while queue:
        x, y = queue.pop()
        for im in imgs:
            rx, ry = find(im[x]), find(im[y])
            if rx != ry:
                parent[ry] = rx
                queue.append((rx, ry))
    ids: dict[int, int] = {}
    block_of = tuple(ids.setdefault(find(x), len(ids)) for x in range(k))
    return BlockSystem(block_of=block_of, num_blocks=len(ids))


def is_primitive(gens: Sequence[Permutation]) -> PrimitivityResult:
    """Primitive, or imprimitive together with a witnessing block system.

    For each point ``d != 0`` the finest block system joining 0 and ``d`` is
    computed by union-find closure under the generators; the group is
    primitive iff every such system is the single whole block.
    """
    k = _degree(gens)
    if not is_transitive(gens):
        raise NotTransitive("primitivity is only defined for transitive groups")
    imgs = [g.images for g in gens]
    for d in range(1, k):
        bs = _minimal_block_system(imgs, k, 0, d)
        if bs.num_blocks > 1:
            return PrimitivityResult(False, bs)
    return PrimitivityResult(True)


# --- stabilizer chain ------------------------------------------------------


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple([q[x] for x in p])


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


class StabilizerChain:
    """Base and strong generating set built by the deterministic Schreier-Sims method.

    Base points are taken in increasing order.  ``transversals[i]`` maps each
    point ``p`` of the i-th basic orbit to a coset representative sending
    ``base[i]`` to ``p``.
    """

    def __init__(self, gens: Sequence[Permutation], degree: int | None = None):
        if degree is None:
            degree = _degree(gens)
        self.degree = degree
        self._id = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []  # strong[i]: generators of the i-th stabilizer
        self.transversals: list[dict[int, tuple]] = []
        tuples = [g.images for g in gens if not g.is_identity()]
        for g in tuples:
            if all(g[b] == b for b in self.base):
                self._extend_base(g)
        if not self.base:
            return
        for g in tuples:
            self.strong[0].append(g)
        for i in range(len(self.base)):
            # generators fixing base[:i] belong to level i as well
            if i > 0:
                for g in tuples:
                    if all(g[b] == b for b in self.base[:i]) and g not in self.strong[i]:
                        self.strong[i].append(g)
            self._rebuild(i)
        self._schreier_sims()

    def _extend_base(self, g: tuple) -> None:
        for x in range(self.degree):
            if g[x] != x and x not in self.base:
                self.base.append(x)
                self.strong.append([])
                self.transversals.append({x: self._id})
                return
        raise AssertionError("non-identity element fixes every point")

    def _rebuild(self, i: int) -> None:
        b = self.base[i]
        trans = {b: self._id}
        frontier = [b]
        gens = self.strong[i]
        while frontier:
            nxt = []
            for p in frontier:
                u = trans[p]
                for g in gens:
                    q = g[p]
                    if q not in trans:
                        trans[q] = _mul(u, g)
                        nxt.append(q)
            frontier = nxt
        self.transversals[i] = trans

    def _strip(self, h: tuple, start: int) -> tuple[tuple, int]:
        for j in range(start, len(self.base)):
            p = h[self.base[j]]
            u = self.transversals[j].get(p)
            if u is None:
                return h, j
            h = _mul(h, _inv(u))
        return h, len(self.base)

    def _schreier_sims(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            restart = None
            trans = self.transversals[i]
            for p, u in list(trans.items()):
                for x in list(self.strong[i]):
                    ux = _mul(u, x)
                    v = trans[x[p]]
                    if ux == v:
                        continue
                    h = _mul(ux, _inv(v))
                    res, j = self._strip(h, i + 1)
                    if j < len(self.base) or res != self._id:
                        if j == len(self.base):
                            self._extend_base(res)
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(res)
                            self._rebuild(level)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    def order(self) -> int:
        return math.prod(len(t) for t in self.transversals)

    def contains(self, g: Permutation) -> bool:
        res, j = self._strip(g.images, 0)
        return j == len(self.base) and res == self._id


def group_order(gens: Sequence[Permutation], max_degree: int | None = None) -> int:
    """Exact order of ``<gens>`` via a stabilizer chain."""
    k = _degree(gens)
    cap = degree_cap() if max_degree is None else max_degree
    if k > cap:
        raise DegreeTooLarge(f"degree {k} exceeds the exact-order cap {cap}")
    return StabilizerChain(gens, k).order()


def cayley_order(gens: Sequence[Permutation], bound: int = 100_000) -> int:
    """Order by enumerating every element (breadth-first over the Cayley graph)."""
    k = _degree(gens)
    n = _accel.cayley_enumerate([g.images for g in gens], k, bound)
    if n < 0:
        raise GroupTooLarge(f"group has more than {bound} elements")
    return n


# --- witnesses -------------------------------------------------------------


@dataclass(frozen=True)
class Word:
    """A word ``(x1^e1 x2^e2 ...)^f`` in named generators.

    ``outer=None`` means: the smallest exponent turning the bracketed element
    into a single cycle, if one exists.
    """

    factors: tuple  # ((name, exponent), ...)
    outer: int | None = 1

    def base(self, named: Mapping[str, Permutation]) -> Permutation:
        out = None
        for name, e in self.factors:
            term = power(named[name], e)
            out = term if out is None else compose(out, term)
        return out

    def evaluate(self, named: Mapping[str, Permutation]) -> Permutation | None:
        b = self.base(named)
        if self.outer is None:
            f = _isolating_exponent(b)
            return None if f is None else power(b, f)
        return power(b, self.outer)

    def with_outer(self, f: int) -> "Word":
        return Word(self.factors, f)

    def __str__(self) -> str:
        inner = " ".join(n if e == 1 else f"{n}^{e}" for n, e in self.factors)
        if self.outer == 1:
            return inner
        if self.outer is None:
            return f"({inner})^*"
        return f"({inner})^{self.outer}"


def _isolating_exponent(p: Permutation) -> int | None:
    """Smallest f > 0 with p^f a single cycle of length >= 2, else None."""
    lengths = cycle_decomposition(p).lengths()
    best = None
    for idx, L in enumerate(lengths):
        others = [x for j, x in enumerate(lengths) if j != idx]
        f = math.lcm(1, *others)
        # every other cycle dies; the chosen one stays a single cycle
        if math.gcd(L, f) == 1:
            if best is None or f < best:
                best = f
    return best


def default_word_pool(names: Sequence[str] = ("s", "r"), max_e: int = 5, max_f: int = 12) -> list[Word]:
    """Words ``(x^e t)^f`` for each named rotation ``x``, then their isolating powers."""
    pool = [Word(((x, 1),)) for x in names]
    for x in names:
        for e in range(1, max_e + 1):
            for f in range(1, max_f + 1):
                pool.append(Word(((x, e), ("t", 1)), f))
    for x in names:
        for e in range(1, max_e + 1):
            pool.append(Word(((x, e), ("t", 1)), None))
    return pool


@dataclass(frozen=True)
class JordanWitness:
    word: str
    element: Permutation
    cycle_length: int
    fixed_count: int
    prime_length: bool

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "cycle_length": self.cycle_length,
            "fixed_count": self.fixed_count,
            "prime_length": self.prime_length,
        }


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def witness_from(element: Permutation, word: str = "") -> JordanWitness | None:
    """A witness if ``element`` is one cycle fixing at least three points."""
    dec = cycle_decomposition(element)
    if len(dec.cycles) != 1 or len(dec.fixed_points) < 3:
        return None
    L = len(dec.cycles[0])
    return JordanWitness(word, element, L, len(dec.fixed_points), _is_prime(L))


def _named(gens: Sequence[Permutation], named: Mapping[str, Permutation] | None) -> dict:
    if named is not None:
        return dict(named)
    out = {"s": gens[0]}
    if len(gens) > 1:
        out["t"] = gens[1]
        out["r"] = inverse(compose(gens[0], gens[1]))
    return out


def find_jordan_witness(
    gens: Sequence[Permutation],
    word_pool: Sequence[Word] | None = None,
    named: Mapping[str, Permutation] | None = None,
) -> JordanWitness | None:
    """First word in the pool evaluating to one cycle with >= 3 fixed points.

    Words are evaluated on ``named`` (default: ``s, t = gens`` and
    ``r = (s t)^-1``); words mentioning an unavailable name are skipped.
    """
    env = _named(gens, named)
    pool = default_word_pool() if word_pool is None else word_pool
    for w in pool:
        if any(name not in env for name, _ in w.factors):
            continue
        base = w.base(env)
        f = w.outer if w.outer is not None else _isolating_exponent(base)
        if f is None:
            continue
        found = witness_from(power(base, f), str(w.with_outer(f)))
        if found is not None:
            return found
    return None


# --- classification --------------------------------------------------------


class Verdict(str, enum.Enum):
    ALTERNATING = "alternating"
    SYMMETRIC = "symmetric"
    OTHER = "other"


@dataclass(frozen=True)
class GroupClassification:
    verdict: Verdict
    degree: int
    order: int | None
    transitive: bool
    primitive: bool
    evidence: JordanWitness | None = None
    order_method: str = ""
    blocks: BlockSystem | None = None

    @property
    def order_known(self) -> bool:
        return self.order is not None

    def label(self) -> str:
        if self.verdict is Verdict.ALTERNATING:
            return f"A{self.degree}"
        if self.verdict is Verdict.SYMMETRIC:
            return f"S{self.degree}"
        return "other"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "degree": self.degree,
            "order": self.order,
            "transitive": self.transitive,
            "primitive": self.primitive,
            "witness": None if self.evidence is None else self.evidence.to_dict(),
            "order_method": self.order_method,
        }


def classify(
    gens: Sequence[Permutation],
    word_pool: Sequence[Word] | None = None,
    named: Mapping[str, Permutation] | None = None,
    max_degree: int | None = None,
) -> GroupClassification:
    """Alternating, symmetric, or other, with the exact order where affordable.

    Transitive + primitive + a single-cycle witness fixing >= 3 points gives
    ``G >= A_k``; even generators then pin ``G = A_k``.  Without a witness
    the stabilizer chain decides, provided the degree is within the cap.
    """
    k = _degree(gens)
    transitive = is_transitive(gens)
    prim = is_primitive(gens) if transitive else PrimitivityResult(False)
    all_even = all(parity(g) is Parity.EVEN for g in gens)
    if prim.primitive:
        w = find_jordan_witness(gens, word_pool, named)
        if w is not None:
            if all_even:
                return GroupClassification(
                    Verdict.ALTERNATING, k, math.factorial(k) // 2, True, True, w, "witness"
                )
            return GroupClassification(Verdict.SYMMETRIC, k, math.factorial(k), True, True, w, "witness")
    cap = degree_cap() if max_degree is None else max_degree
    if k > cap:
        return GroupClassification(
            Verdict.OTHER, k, None, transitive, prim.primitive, None, "unknown", prim.blocks
        )
    n = group_order(gens, max_degree=cap)
    if transitive and k >= 2 and all_even and n == math.factorial(k) // 2:
        verdict = Verdict.ALTERNATING
    elif transitive and n == math.factorial(k):
        verdict = Verdict.SYMMETRIC
    else:
        verdict = Verdict.OTHER
    return GroupClassification(
        verdict, k, n, transitive, prim.primitive, None, "schreier_sims", prim.blocks
    )
