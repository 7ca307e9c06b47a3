"""Explicit generator pairs for chiral maps with alternating group.

Every builder writes its permutations in the symbolic labels of the
permutation diagram (``1``, ``2'``, ``α``, ``β_1'`` ...) and only then
freezes the labels to points ``0..k-1``.  A primed label ``x'`` always names
the image of ``x`` under ``t``.

The generating triple satisfies ``r * s * t == 1`` with ``t`` an involution,
so ``r = (s t)^-1`` and the map has type ``{order(r), order(s)}``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import BadParams, NotHyperbolic, NotInTable, PlanUnsupported
from .perm import Permutation, compose, from_cycles, inverse, order, parity, Parity

__all__ = [
    "ConstructionId",
    "HyperbolicType",
    "ConstructionParams",
    "LabelMap",
    "GeneratorSet",
    "Outcome",
    "ConstructionPlan",
    "dispatch",
    "build",
    "dualize",
    "searched_lookup",
    "table1_lookup",
    "SEARCHED",
    "TABLE1",
    "build_c3_1",
    "build_c3_3",
    "build_c3_5",
    "build_c3_7",
    "build_c3_9",
    "build_c3_11",
    "build_c3_13",
    "build_c3_15",
    "build_c4_1",
    "build_c4_1_a0",
    "build_c4_3",
    "build_c4_3_a0",
    "build_c4_5",
    "build_c4_7",
    "from_generators",
]


class ConstructionId(str, enum.Enum):
    C3_1 = "C3_1"
    C3_3 = "C3_3"
    C3_5 = "C3_5"
    C3_7 = "C3_7"
    C3_9 = "C3_9"
    C3_11 = "C3_11"
    C3_13 = "C3_13"
    C3_15 = "C3_15"
    C4_1 = "C4_1"
    C4_3 = "C4_3"
    C4_5 = "C4_5"
    C4_7 = "C4_7"
    C4_1_A0 = "C4_1_a0"
    C4_3_A0 = "C4_3_a0"
    C4_5_A0 = "C4_5_a0"
    TABLE1 = "TABLE1"
    SEARCHED = "SEARCHED"
    CUSTOM = "CUSTOM"


@dataclass(frozen=True, order=True)
class HyperbolicType:
    """Face length ``m`` and vertex valency ``n`` with 1/m + 1/n < 1/2."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 3 or self.n < 3:
            raise NotHyperbolic(f"{{{self.m},{self.n}}}: both parameters must be >= 3")
        if Fraction(1, self.m) + Fraction(1, self.n) >= Fraction(1, 2):
            raise NotHyperbolic(f"{{{self.m},{self.n}}} is not hyperbolic")

    @staticmethod
    def is_hyperbolic(m: int, n: int) -> bool:
        return m >= 3 and n >= 3 and Fraction(1, m) + Fraction(1, n) < Fraction(1, 2)

    def dual(self) -> "HyperbolicType":
        return HyperbolicType(self.n, self.m)

    def __str__(self) -> str:
        return f"{{{self.m},{self.n}}}"


@dataclass(frozen=True)
class ConstructionParams:
    construction: ConstructionId
    m: int
    n: int
    a: int = 0
    i: int = 0
    nu: int = 0
    dualized: bool = False

    def to_dict(self) -> dict:
        return {
            "construction": self.construction.value,
            "m": self.m,
            "n": self.n,
            "a": self.a,
            "i": self.i,
            "nu": self.nu,
            "dualized": self.dualized,
        }


class LabelMap:
    """Bijection between diagram labels and points ``0..k-1``."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        index = {lab: p for p, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise BadParams("duplicate diagram label")
        self._labels = labels
        self._index = index

    @classmethod
    def numeric(cls, degree: int) -> "LabelMap":
        return cls([str(j) for j in range(1, degree + 1)])

    @property
    def labels(self) -> tuple:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def point(self, label: str) -> int:
        return self._index[label]

    def label(self, point: int) -> str:
        return self._labels[point]

    def points(self, labels: Sequence[str]) -> list[int]:
        return [self._index[lab] for lab in labels]

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelMap) and self._labels == other._labels

    def __repr__(self) -> str:
        return f"LabelMap({list(self._labels)!r})"


_GREEK = "αβγδεζηθ"


def _label_key(label: str):
    primed = label.endswith("'")
    base = label[:-1] if primed else label
    if base.isdigit():
        return (1 if primed else 0, int(base))
    return (3 if primed else 2, 0)


def _freeze_labels(cycle_lists: Sequence[Sequence[Sequence[str]]]) -> LabelMap:
    # numbered, numbered primes, Greek, Greek primes; Greek in order of first appearance
    seen: dict[str, int] = {}
    for cycles in cycle_lists:
        for cyc in cycles:
            for lab in cyc:
                seen.setdefault(lab, len(seen))
    ordered = sorted(seen, key=lambda lab: (_label_key(lab), seen[lab]))
    return LabelMap(ordered)


def _p(label) -> str:
    return f"{label}'"


def _numbers(lo: int, hi: int) -> list[str]:
    return [str(j) for j in range(lo, hi + 1)]


def _primes_down(hi: int, lo: int = 1) -> list[str]:
    """``hi', (hi-1)', ..., lo'``."""
    return [_p(j) for j in range(hi, lo - 1, -1)]


def _pairs(labels: Sequence[str]) -> list[list[str]]:
    return [[lab, _p(lab)] for lab in labels]


@dataclass(frozen=True)
class GeneratorSet:
    """The triple ``(s, t, r)`` of a map, with ``r * s * t`` the identity."""

    s: Permutation
    t: Permutation
    r: Permutation
    labels: LabelMap
    type: HyperbolicType
    params: ConstructionParams
    # which generator the diagram draws in red
    drawn: str = "s"

    @property
    def degree(self) -> int:
        return self.s.degree

    def generators(self) -> list[Permutation]:
        return [self.s, self.t]

    def element(self, name: str) -> Permutation:
        return {"s": self.s, "t": self.t, "r": self.r}[name]

    def point(self, label: str) -> int:
        return self.labels.point(label)

    def invariant_failures(self) -> list[str]:
        """Empty when orders, parities and ``r s t = 1`` all hold."""
        out = []
        if order(self.s) != self.type.n:
            out.append(f"order(s)={order(self.s)} != n={self.type.n}")
        if order(self.t) != 2:
            out.append(f"order(t)={order(self.t)} != 2")
        st = compose(self.s, self.t)
        if order(st) != self.type.m:
            out.append(f"order(st)={order(st)} != m={self.type.m}")
        if parity(self.s) is not Parity.EVEN:
            out.append("s is odd")
        if parity(self.t) is not Parity.EVEN:
            out.append("t is odd")
        if not compose(compose(self.r, self.s), self.t).is_identity():
            out.append("r s t != 1")
        return out


def _from_s_t(s_cycles, t_cycles, params: ConstructionParams, m: int, n: int) -> GeneratorSet:
    labels = _freeze_labels([s_cycles, t_cycles])
    k = len(labels)
    s = from_cycles([labels.points(c) for c in s_cycles], k)
    t = from_cycles([labels.points(c) for c in t_cycles], k)
    r = inverse(compose(s, t))
    return GeneratorSet(s=s, t=t, r=r, labels=labels, type=HyperbolicType(m, n), params=params)


def _from_r_t(r_cycles, t_cycles, params: ConstructionParams, m: int, n: int) -> GeneratorSet:
    labels = _freeze_labels([r_cycles, t_cycles])
    k = len(labels)
    r = from_cycles([labels.points(c) for c in r_cycles], k)
    t = from_cycles([labels.points(c) for c in t_cycles], k)
    s = compose(inverse(r), t)
    return GeneratorSet(
        s=s, t=t, r=r, labels=labels, type=HyperbolicType(m, n), params=params, drawn="r"
    )


def from_generators(s: Permutation, t: Permutation, labels: LabelMap | None = None) -> GeneratorSet:
    """Wrap an arbitrary pair; the type is read off the generator orders."""
    st = compose(s, t)
    m, n = order(st), order(s)
    params = ConstructionParams(ConstructionId.CUSTOM, m=m, n=n)
    # arbitrary pairs need not be hyperbolic, so bypass the type check
    typ = object.__new__(HyperbolicType)
    object.__setattr__(typ, "m", m)
    object.__setattr__(typ, "n", n)
    return GeneratorSet(
        s=s,
        t=t,
        r=inverse(st),
        labels=labels or LabelMap.numeric(s.degree),
        type=typ,
        params=params,
    )


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def _check_i(i: int, allowed=(-1, 1)) -> None:
    _require(i in allowed, f"i must be one of {allowed}, got {i}")


# --- even m < odd n ---------------------------------------------------------


def build_c3_1(a: int, i: int) -> GeneratorSet:
    """Type {4, n} with n = 4a + 4 + i odd; degree n + 1.

    The dispatcher only uses n >= 9; (a, i) = (1, -1) gives a type {4, 7}
    diagram that is still buildable for inspection.
    """
    _check_i(i)
    _require(a >= 1, "C3_1 needs a >= 1")
    n = 4 * a + 4 + i
    nums = _numbers(1, 2 * a)
    t = [["α", "α'"], ["β", "β'"]] + _pairs(nums)
    if i == -1:
        s = [nums + ["α", "α'", "β"] + _primes_down(2 * a)]
    else:
        s = [nums + ["α", "β", "γ", "α'"] + _primes_down(2 * a) + ["δ"]]
    return _from_s_t(s, t, ConstructionParams(ConstructionId.C3_1, 4, n, a=a, i=i), 4, n)


def build_c3_3(a: int, i: int) -> GeneratorSet:
    """Type {6, n} with n = 4a + 6 + i; degree n + 2 (i = -1) or n + 1 (i = 1)."""
    _check_i(i)
    _require(a >= 1, "C3_3 needs a >= 1")
    n = 4 * a + 6 + i
    nums = _numbers(1, 2 * a)
    t = [["α", "α'"], ["β", "β'"]]
    if i == 1:
        t += [["γ", "γ'"], ["δ", "δ'"]]
    t += _pairs(nums)
    if i == -1:
        s = [nums + ["α", "β", "γ"] + _primes_down(2 * a) + ["δ", "ε"]]
    else:
        s = [nums + ["α", "β", "β'", "γ", "δ", "γ'", "α'"] + _primes_down(2 * a)]
    return _from_s_t(s, t, ConstructionParams(ConstructionId.C3_3, 6, n, a=a, i=i), 6, n)


def build_c3_5(a: int, i: int) -> GeneratorSet:
    """Type {8, n} with n = 4a + 6 + i."""
    _check_i(i)
    _require(a >= 1, "C3_5 needs a >= 1")
    n = 4 * a + 6 + i
    nums = _numbers(1, 2 * a)
    t = [["α", "α'"], ["β", "β'"]] + _pairs(nums)
    if i == -1:
        s = [nums + ["α", "β", "γ", "δ", "ε"] + _primes_down(2 * a)]
    else:
        s = [nums + ["α", "α'", "β", "γ", "δ", "ε", "ζ"] + _primes_down(2 * a)]
    return _from_s_t(s, t, ConstructionParams(ConstructionId.C3_5, 8, n, a=a, i=i), 8, n)


def _alpha(j: int) -> str:
    return f"α_{j}"


def _beta(j: int) -> str:
    return f"β_{j}"


def _chain_ta_ra(a: int) -> tuple[list, list]:
    """The ladder of ``a`` alpha/beta rungs shared by the r,t-based constructions."""
    t_a, r_a = [], []
    for j in range(1, a + 1):
        t_a += [[_alpha(j), _p(_alpha(j))], [_beta(j), _p(_beta(j))]]
        r_a += [[_p(_alpha(j)), _beta(j)], [_p(_beta(j)), _alpha(j + 1)]]
    return t_a, r_a


def build_c3_7(m: int, a: int, i: int) -> GeneratorSet:
    """Type {m, n}, even m >= 10, n = m + 4a + i odd; built from r and t."""
    _check_i(i)
    _require(m >= 10 and m % 2 == 0, "C3_7 needs even m >= 10")
    _require(a >= 0, "C3_7 needs a >= 0")
    n = m + 4 * a + i
    t_a, r_a = _chain_ta_ra(a)
    t_i = [["8", "9"]] if i == -1 else [[_alpha(a + 1), _p(_alpha(a + 1))]]
    r = [_numbers(1, m), ["1'", _alpha(1)]] + r_a
    t = [["1", "1'"], ["2", "3"], ["4", "5"], ["6", "7"], [str(m), _p(m)]] + t_a + t_i
    params = ConstructionParams(ConstructionId.C3_7, m, n, a=a, i=i)
    return _from_r_t(r, t, params, m, n)


# --- even m > odd n ---------------------------------------------------------


def _split_m(m: int, n: int) -> tuple[int, int]:
    """Write m + 6 = nu * n + a with 0 <= a < n."""
    return divmod(m + 6, n)


def build_c3_9(m: int) -> GeneratorSet:
    """Type {m, 5} for even m with m + 6 = 5nu + a, nu >= 4; degree 5nu + a."""
    _require(m % 2 == 0, "C3_9 needs even m")
    nu, a = _split_m(m, 5)
    _require(nu >= 4, "C3_9 needs nu >= 4, i.e. m >= 14")
    s = [_numbers(5 * q + 1, 5 * q + 5) for q in range(nu)]
    t_a = [[str(5 * nu + 1 - j), _p(5 * nu + 1 - j)] for j in range(1, a + 1)]
    t_nu = [[str(5 * q), str(5 * q + 1)] for q in range(1, nu)]
    t = [["2", "4"], ["7", "9"], ["12", "14"]] + t_a + t_nu
    params = ConstructionParams(ConstructionId.C3_9, m, 5, a=a, nu=nu)
    return _from_s_t(s, t, params, m, 5)


def build_c3_11(n: int, a: int) -> GeneratorSet:
    """Type {n + a, n}, odd n >= 7, 1 <= a <= n - 6, n + a even; degree n + a + 2."""
    _require(n >= 7 and n % 2 == 1, "C3_11 needs odd n >= 7")
    _require(1 <= a <= n - 6, "C3_11 needs 1 <= a <= n - 6")
    _require((n + a) % 2 == 0, "C3_11 needs n + a even")
    s = [_numbers(1, n)]
    t = [["1", "3"]] + _pairs(_numbers(4, 5 + a))
    m = n + a
    return _from_s_t(s, t, ConstructionParams(ConstructionId.C3_11, m, n, a=a), m, n)


def _ncycles(n: int, nu: int) -> list[list[str]]:
    return [_numbers(n * q + 1, n * q + n) for q in range(nu)]


def build_c3_13(n: int, m: int) -> GeneratorSet:
    """Type {m, n}, odd n >= 11, even m with m + 6 = nu n + a, nu >= 2; degree nu n + a."""
    _require(n >= 11 and n % 2 == 1, "C3_13 needs odd n >= 11")
    _require(m % 2 == 0, "C3_13 needs even m")
    nu, a = _split_m(m, n)
    _require(nu >= 2, "C3_13 needs nu >= 2")
    t_a = _pairs(_numbers(1, a))
    t_nu = [[str(q * n), str(q * n + 1)] for q in range(1, nu)]
    t = [[str(n + 2), str(n + 4)], [str(n + 5), str(n + 7)], [str(n + 8), str(n + 10)]]
    t += t_a + t_nu
    params = ConstructionParams(ConstructionId.C3_13, m, n, a=a, nu=nu)
    return _from_s_t(_ncycles(n, nu), t, params, m, n)


def build_c3_15(n: int, m: int) -> GeneratorSet:
    """Type {m, n} for n in {7, 9}, even m with m + 6 = nu n + a, nu >= 3."""
    _require(n in (7, 9), "C3_15 needs n in {7, 9}")
    _require(m % 2 == 0, "C3_15 needs even m")
    nu, a = _split_m(m, n)
    _require(nu >= 3, "C3_15 needs nu >= 3")
    t_nu = [[str(q * n), str(q * n + 1)] for q in range(1, nu)]
    t_a = [[str(n * nu + 1 - j), _p(n * nu + 1 - j)] for j in range(1, a + 1)]
    t = [["1", "3"], ["4", "6"], [str(n + 2), str(n + 4)]] + t_nu + t_a
    params = ConstructionParams(ConstructionId.C3_15, m, n, a=a, nu=nu)
    return _from_s_t(_ncycles(n, nu), t, params, m, n)


# --- both even --------------------------------------------------------------


_T_GREEK4 = [["α", "α'"], ["β", "β'"], ["γ", "γ'"], ["δ", "δ'"]]


def _c4_1(a: int, i: int, cid: ConstructionId) -> GeneratorSet:
    n = 4 * a + 7 + i
    nums = _numbers(1, 2 * a)
    down = _primes_down(2 * a)
    if i == -1:
        s = [nums + ["α", "α'", "β"] + down + ["γ", "δ", "γ'"], ["δ'", "ε"]]
    else:
        s = [nums + ["α", "α'", "β", "β'", "ζ"] + down + ["γ", "δ", "γ'"], ["δ'", "ε"]]
    t = _T_GREEK4 + _pairs(nums)
    return _from_s_t(s, t, ConstructionParams(cid, 4, n, a=a, i=i), 4, n)


def build_c4_1(a: int, i: int) -> GeneratorSet:
    """Type {4, n} with n = 4a + 7 + i even."""
    _check_i(i)
    _require(a >= 1, "C4_1 needs a >= 1 (use build_c4_1_a0 for n in {6, 8})")
    return _c4_1(a, i, ConstructionId.C4_1)


def build_c4_1_a0(i: int) -> GeneratorSet:
    """Types {4, 6} (i = -1) and {4, 8} (i = 1): the numbered points dropped."""
    _check_i(i)
    return _c4_1(0, i, ConstructionId.C4_1_A0)


def _c4_3(a: int, i: int, cid: ConstructionId) -> GeneratorSet:
    n = 4 * a + 7 + i
    nums = _numbers(1, 2 * a)
    down = _primes_down(2 * a)
    if i == -1:
        s = [nums + ["α", "α'", "β"] + down + ["δ", "ε", "δ'"], ["β'", "γ"]]
    else:
        s = [nums + ["α", "α'", "β", "β'", "γ"] + down + ["δ", "ε", "δ'"], ["γ'", "ζ"]]
    t = _T_GREEK4 + _pairs(nums)
    return _from_s_t(s, t, ConstructionParams(cid, 6, n, a=a, i=i), 6, n)


def build_c4_3(a: int, i: int) -> GeneratorSet:
    """Type {6, n} with n = 4a + 7 + i even."""
    _check_i(i)
    _require(a >= 1, "C4_3 needs a >= 1 (use build_c4_3_a0 for {6, 8})")
    return _c4_3(a, i, ConstructionId.C4_3)


def build_c4_3_a0() -> GeneratorSet:
    """Type {6, 8}."""
    return _c4_3(0, 1, ConstructionId.C4_3_A0)


def build_c4_5(a: int, i: int) -> GeneratorSet:
    """Type {8, n} with n = 4a + 7 + i >= 8, a >= 0."""
    _check_i(i)
    _require(a >= 0, "C4_5 needs a >= 0")
    n = 4 * a + 7 + i
    _require(n >= 8, "C4_5 needs n >= 8")
    nums = _numbers(1, 2 * a)
    down = _primes_down(2 * a)
    if i == -1:
        s = [nums + ["α", "γ", "ε"] + down + ["δ", "ζ", "δ'"], ["α'", "β"]]
    else:
        # for a = 0 this is (α,β,γ,γ',ε,δ,ζ,δ')(α',η)
        s = [nums + ["α", "β", "γ", "γ'", "ε"] + down + ["δ", "ζ", "δ'"], ["α'", "η"]]
    t = _pairs(nums) + _T_GREEK4
    cid = ConstructionId.C4_5_A0 if a == 0 else ConstructionId.C4_5
    return _from_s_t(s, t, ConstructionParams(cid, 8, n, a=a, i=i), 8, n)


def build_c4_7(m: int, n: int) -> GeneratorSet:
    """Type {m, n} for even 10 <= m <= n; built from r and t."""
    _require(m % 2 == 0 and n % 2 == 0, "C4_7 needs m and n even")
    _require(10 <= m <= n, "C4_7 needs 10 <= m <= n")
    a, i = divmod(n - m, 4)
    params = ConstructionParams(ConstructionId.C4_7, m, n, a=a, i=i)
    if m == n and m % 4 == 0:
        r = [_numbers(1, m), ["1'", "α", "β", "γ"]]
        t = [["1", "1'"], ["2", "3"], ["4", "5"], ["6", "8"]]
        return _from_r_t(r, t, params, m, n)
    t_a, r_a = _chain_ta_ra(a)
    r_i = [] if i == 0 else [[_p(m - 1), "γ"], [_p(m), "δ"]]
    r = [_numbers(1, m), ["1'", _alpha(1)]] + r_a + r_i
    t = [["1", "1'"], ["2", "3"], ["4", "5"], ["6", "8"], [str(m - 1), _p(m - 1)], [str(m), _p(m)]]
    t += t_a
    return _from_r_t(r, t, params, m, n)


# --- Table 1 ----------------------------------------------------------------

_S9 = "(1,2,3,4,5,6,7,8,9)(10,11,12)"
_T9 = "(1,10)(2,12)(3,13)(4,14)(5,15)(6,16)"
_C5 = "(1,2,3,4,5)(6,7,8,9,10)"
_C7 = "(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)"

# (m, n) -> (s, t, degree of the alternating group)
TABLE1: dict[tuple[int, int], tuple[str, str, int]] = {
    (4, 5): ("(1,2,3,4,5)", "(1,3)(4,6)", 6),
    (6, 5): (_C5, "(1,6)(2,4)(7,8)(9,10)", 10),
    (8, 5): (_C5, "(1,6)(2,4)", 10),
    (10, 5): (_C5, "(1,6)(2,4)(7,11)(8,12)", 12),
    (12, 5): (_C5, "(1,6)(2,4)(7,11)(8,12)(9,13)(10,14)", 14),
    (6, 6): ("(1,2,3,4,5,6)(7,8,9,10,11,12)", "(1,7)(2,5)(6,13)(8,12)(9,14)(10,15)", 15),
    (4, 7): ("(1,2,3,4,5,6,7)", "(1,5)(2,3)(4,9)(7,8)", 9),
    (6, 7): (_C7, "(1,3)(4,6)(7,8)(9,13)(10,15)(11,16)", 16),
    (10, 7): (_C7, "(1,8)(2,4)(5,6)(9,10)", 14),
    (12, 7): (_C7, "(1,8)(2,3)(4,5)(6,15)(7,16)(9,17)(10,12)(13,14)", 17),
    (14, 7): (_C7, "(1,8)(7,9)(10,15)(11,16)", 16),
    (14, 9): (_S9, _T9, 16),
    (16, 9): (_S9 + "(13,17,18)", _T9, 18),
    (18, 9): (_S9 + "(13,17,18)(14,19,20)", _T9, 20),
    (20, 9): (_S9 + "(13,17,18)(14,19,20)(15,21,22)", _T9, 22),
}


# Pairs found by exhaustive search, used where a table row is reflexible.
# {4,5}: no generating pair of A_6 is chiral, and the genus bound with the
# search rules out every degree below 15.
SEARCHED: dict[tuple[int, int], tuple[str, str, int]] = {
    (4, 5): (
        "(1,2,3,4,5)(6,7,8,9,10)(11,12,13,14,15)",
        "(1,2)(3,6)(4,7)(8,11)(9,15)(10,12)",
        15,
    ),
}


def _from_rows(rows, cid, m, n) -> GeneratorSet:
    from .perm import parse_cycles

    s_txt, t_txt, k = rows[(m, n)]
    s = parse_cycles(s_txt, k)
    t = parse_cycles(t_txt, k)
    return GeneratorSet(
        s=s,
        t=t,
        r=inverse(compose(s, t)),
        labels=LabelMap.numeric(k),
        type=HyperbolicType(m, n),
        params=ConstructionParams(cid, m, n),
    )


def searched_lookup(typ: HyperbolicType | tuple[int, int]) -> GeneratorSet:
    m, n = (typ.m, typ.n) if isinstance(typ, HyperbolicType) else typ
    if (m, n) not in SEARCHED:
        raise NotInTable(f"{{{m},{n}}} has no searched pair")
    return _from_rows(SEARCHED, ConstructionId.SEARCHED, m, n)


def table1_lookup(typ: HyperbolicType | tuple[int, int]) -> GeneratorSet:
    m, n = (typ.m, typ.n) if isinstance(typ, HyperbolicType) else typ
    if (m, n) not in TABLE1:
        raise NotInTable(f"{{{m},{n}}} is not a Table 1 type")
    return _from_rows(TABLE1, ConstructionId.TABLE1, m, n)


# --- duality and dispatch ---------------------------------------------------


def dualize(g: GeneratorSet) -> GeneratorSet:
    """Swap vertices and faces: type {m, n} becomes {n, m}.

    The new vertex rotation is ``s t = r^-1`` and ``t`` is kept, so the new
    face rotation is ``s^-1``.  Applying this twice returns the original triple.
    """
    s2 = compose(g.s, g.t)
    r2 = inverse(g.s)
    typ = object.__new__(HyperbolicType)
    object.__setattr__(typ, "m", g.type.n)
    object.__setattr__(typ, "n", g.type.m)
    params = replace(g.params, dualized=not g.params.dualized)
    drawn = {"s": "r", "r": "s"}[g.drawn]
    return GeneratorSet(s=s2, t=g.t, r=r2, labels=g.labels, type=typ, params=params, drawn=drawn)


class Outcome(str, enum.Enum):
    SUPPORTED = "supported"
    UNSUPPORTED_EXTERNAL = "unsupported_external"
    NOT_HYPERBOLIC = "not_hyperbolic"


@dataclass(frozen=True)
class ConstructionPlan:
    requested: tuple[int, int]
    outcome: Outcome
    params: ConstructionParams | None = None
    theorem: str | None = None
    reason: str = ""

    @property
    def supported(self) -> bool:
        return self.outcome is Outcome.SUPPORTED

    def to_dict(self) -> dict:
        return {
            "requested": list(self.requested),
            "outcome": self.outcome.value,
            "params": None if self.params is None else self.params.to_dict(),
            "theorem": self.theorem,
            "reason": self.reason,
        }


def _plan(requested, cid, m, n, dual, a=0, i=0, nu=0) -> ConstructionPlan:
    params = ConstructionParams(cid, m, n, a=a, i=i, nu=nu, dualized=dual)
    return ConstructionPlan(requested, Outcome.SUPPORTED, params=params)


def dispatch(typ: HyperbolicType | tuple[int, int]) -> ConstructionPlan:
    """Choose the construction covering ``typ``, up to duality.

    Raises :class:`NotHyperbolic` for spherical or toroidal types.
    """
    if not isinstance(typ, HyperbolicType):
        typ = HyperbolicType(*typ)
    req = (typ.m, typ.n)
    m, n = req
    if m % 2 == 1 and n % 2 == 1:
        return ConstructionPlan(
            req, Outcome.UNSUPPORTED_EXTERNAL, theorem="CHNS",
            reason="both m and n odd: covered by Conder-Hucikova-Nedela-Siran",
        )
    dual = False
    if m % 2 == 1 or (n % 2 == 0 and m > n):
        m, n, dual = n, m, True
    if n == 3:
        return ConstructionPlan(
            req, Outcome.UNSUPPORTED_EXTERNAL, theorem="BCC",
            reason="valency 3: covered by Bujalance-Conder-Costa",
        )
    if (m, n) in SEARCHED:
        return _plan(req, ConstructionId.SEARCHED, m, n, dual)
    if (m, n) in TABLE1:
        return _plan(req, ConstructionId.TABLE1, m, n, dual)

    if n % 2 == 1:
        if m < n:
            if m == 4:
                return _plan(req, ConstructionId.C3_1, m, n, dual, *_ai(n, 4))
            if m in (6, 8):
                cid = ConstructionId.C3_3 if m == 6 else ConstructionId.C3_5
                return _plan(req, cid, m, n, dual, *_ai(n, 6))
            a, i = _ai(n - m, 0)
            return _plan(req, ConstructionId.C3_7, m, n, dual, a=a, i=i)
        # odd n < even m
        nu, a = _split_m(m, n)
        if n == 5:
            return _plan(req, ConstructionId.C3_9, m, n, dual, a=a, nu=nu)
        if m <= 2 * n - 6:
            return _plan(req, ConstructionId.C3_11, m, n, dual, a=m - n)
        if n in (7, 9):
            return _plan(req, ConstructionId.C3_15, m, n, dual, a=a, nu=nu)
        return _plan(req, ConstructionId.C3_13, m, n, dual, a=a, nu=nu)

    # both even, m <= n
    if m == 4:
        if n in (6, 8):
            return _plan(req, ConstructionId.C4_1_A0, m, n, dual, a=0, i=n - 7)
        return _plan(req, ConstructionId.C4_1, m, n, dual, *_ai(n, 7))
    if m == 6:
        if n == 8:
            return _plan(req, ConstructionId.C4_3_A0, m, n, dual, a=0, i=1)
        return _plan(req, ConstructionId.C4_3, m, n, dual, *_ai(n, 7))
    if m == 8:
        a, i = _ai(n, 7)
        cid = ConstructionId.C4_5_A0 if a == 0 else ConstructionId.C4_5
        return _plan(req, cid, m, n, dual, a=a, i=i)
    a, i = divmod(n - m, 4)
    return _plan(req, ConstructionId.C4_7, m, n, dual, a=a, i=i)


def _ai(n: int, offset: int) -> tuple[int, int]:
    """Solve n = 4a + offset + i with i in {-1, 1}."""
    rest = n - offset
    if rest % 4 == 1:
        return (rest - 1) // 4, 1
    if rest % 4 == 3:
        return (rest + 1) // 4, -1
    raise BadParams(f"n - {offset} = {rest} is not odd")


def build_params(p: ConstructionParams) -> GeneratorSet:
    """Build the undualized generators described by ``p``."""
    c = ConstructionId
    builders = {
        c.C3_1: lambda: build_c3_1(p.a, p.i),
        c.C3_3: lambda: build_c3_3(p.a, p.i),
        c.C3_5: lambda: build_c3_5(p.a, p.i),
        c.C3_7: lambda: build_c3_7(p.m, p.a, p.i),
        c.C3_9: lambda: build_c3_9(p.m),
        c.C3_11: lambda: build_c3_11(p.n, p.a),
        c.C3_13: lambda: build_c3_13(p.n, p.m),
        c.C3_15: lambda: build_c3_15(p.n, p.m),
        c.C4_1: lambda: build_c4_1(p.a, p.i),
        c.C4_1_A0: lambda: build_c4_1_a0(p.i),
        c.C4_3: lambda: build_c4_3(p.a, p.i),
        c.C4_3_A0: build_c4_3_a0,
        c.C4_5: lambda: build_c4_5(p.a, p.i),
        c.C4_5_A0: lambda: build_c4_5(0, p.i),
        c.C4_7: lambda: build_c4_7(p.m, p.n),
        c.TABLE1: lambda: table1_lookup((p.m, p.n)),
        c.SEARCHED: lambda: searched_lookup((p.m, p.n)),
    }
    if p.construction not in builders:
        raise PlanUnsupported(f"no builder for {p.construction.value}")
    return builders[p.construction]()


def build(plan: ConstructionPlan) -> GeneratorSet:
    """Execute a supported plan, dualizing when the plan says so."""
    if not plan.supported:
        raise PlanUnsupported(f"{plan.requested}: {plan.outcome.value} ({plan.theorem})")
    g = build_params(replace(plan.params, dualized=False))
    if plan.params.dualized:
        g = dualize(g)
    return g
