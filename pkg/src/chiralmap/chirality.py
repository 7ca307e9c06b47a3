"""Reflexible or chiral?

A map ``(G; s, t)`` is reflexible exactly when some automorphism of ``G``
fixes ``t`` and inverts ``s``.  Three routes are offered:

* the two diagram lemmas: cheap sufficient conditions for chirality, valid
  when every automorphism of ``G`` is induced by a relabelling of the points;
* an exhaustive search for such a relabelling ``pi`` with ``s^pi = s^-1`` and
  ``t^pi = t``;
* an abstract check that ``s -> s^-1, t -> t`` extends to an automorphism,
  by walking the Cayley graph of ``G`` (or, for larger groups, comparing the
  order of the diagonal subgroup ``<(s, s^-1), (t, t)>`` with ``|G|``).

Only the abstract check is sound without knowing ``Aut(G)``; the other two
rely on ``Aut(G) = S_k``, true for ``A_k`` and ``S_k`` when ``k >= 7``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from . import _accel
from .constructions import GeneratorSet
from .errors import Cancelled, ChiralMapError, GroupTooLarge, SearchTooLarge
from .groups import GroupClassification, Verdict, group_order
from .perm import Permutation, compose, cycle_decomposition, inverse, order, power

__all__ = [
    "LemmaWitness",
    "Relabelling",
    "ConjugationResult",
    "AbstractResult",
    "Method",
    "ChiralityVerdict",
    "OracleDisagreement",
    "check_lemma_2_6",
    "check_lemma_2_7",
    "conjugation_search",
    "abstract_reflexibility",
    "decide_chirality",
]

DEFAULT_SEARCH_BOUND = 10**7
DEFAULT_ORDER_BOUND = 10**5


class OracleDisagreement(ChiralMapError):
    """A lemma certified chirality but a relabelling was found anyway."""


def _cancelled(token) -> bool:
    return token is not None and token.is_set()


def _signed_order(values: Iterable[int]) -> list[int]:
    # |v| ascending, positive before negative
    return sorted(set(values), key=lambda v: (abs(v), v < 0))


@dataclass(frozen=True)
class LemmaWitness:
    lemma: str  # "L2_6" or "L2_7"
    zeta: int
    b: int
    c: int
    generator: str = "s"  # rotation the lemma was applied to: "s", or "r" in its place
    power_variant: int = 1  # L2_7 only: fixed by s or by s^2
    zeta_label: str = ""

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "zeta": self.zeta_label or str(self.zeta + 1),
            "b": self.b,
            "c": self.c,
            "generator": self.generator,
            "power_variant": self.power_variant,
        }


def _unique_zeta(x: Permutation, t: Permutation, b: int) -> int | None:
    y = compose(power(x, b), t)
    cands = [p for p in range(x.degree) if y(p) == p and t(p) != p]
    return cands[0] if len(cands) == 1 else None


def _lemma_search(g: GeneratorSet, b_range, c_range, generator: str, second_condition):
    x = g.element(generator)
    t = g.t
    n = order(x)
    k = g.degree
    bs = _signed_order(range(-n, n + 1) if b_range is None else b_range)
    cs = _signed_order(range(-k, k + 1) if c_range is None else c_range)
    for b in bs:
        if b == 0:
            continue
        zeta = _unique_zeta(x, t, b)
        if zeta is None:
            continue
        for c in cs:
            variant = second_condition(x, t, zeta, c)
            if variant:
                return LemmaWitness(
                    lemma="",
                    zeta=zeta,
                    b=b,
                    c=c,
                    generator=generator,
                    power_variant=variant,
                    zeta_label=g.labels.label(zeta),
                )
    return None


def _cond_2_6(x, t, zeta, c):
    # zeta x^c fixed by t, zeta t x^-c not
    p = power(x, c)(zeta)
    q = power(x, -c)(t(zeta))
    return 1 if t(p) == p and t(q) != q else 0


def _cond_2_7(x, t, zeta, c):
    # zeta x^c t fixed by x^v, zeta t x^-c t not, for v = 1 then 2
    p = t(power(x, c)(zeta))
    q = t(power(x, -c)(t(zeta)))
    for v in (1, 2):
        xv = power(x, v)
        if xv(p) == p and xv(q) != q:
            return v
    return 0


def check_lemma_2_6(g: GeneratorSet, b_range=None, c_range=None, generator: str = "s") -> LemmaWitness | None:
    """Unique-fixed-point criterion with the second condition on ``t``.

    Default ranges: ``b`` in ``[-n, n] \\ {0}``, ``c`` in ``[-k, k]``.
    ``None`` means no witness in range, which says nothing about reflexibility.
    """
    w = _lemma_search(g, b_range, c_range, generator, _cond_2_6)
    return None if w is None else _with_lemma(w, "L2_6")


def check_lemma_2_7(g: GeneratorSet, b_range=None, c_range=None, generator: str = "s") -> LemmaWitness | None:
    """As :func:`check_lemma_2_6`, second condition read through ``s`` (or ``s^2``)."""
    w = _lemma_search(g, b_range, c_range, generator, _cond_2_7)
    return None if w is None else _with_lemma(w, "L2_7")


def _with_lemma(w: LemmaWitness, lemma: str) -> LemmaWitness:
    return LemmaWitness(lemma, w.zeta, w.b, w.c, w.generator, w.power_variant, w.zeta_label)


# --- relabelling search ----------------------------------------------------


@dataclass(frozen=True)
class Relabelling:
    pi: Permutation

    def verify(self, s: Permutation, t: Permutation) -> bool:
        return s.conjugate(self.pi) == inverse(s) and t.conjugate(self.pi) == t


@dataclass(frozen=True)
class ConjugationResult:
    relabelling: Relabelling | None
    candidates: int  # branch choices tried

    @property
    def reflexible(self) -> bool:
        return self.relabelling is not None


def conjugation_search(
    g: GeneratorSet,
    bound: int = DEFAULT_SEARCH_BOUND,
    cancel=None,
) -> ConjugationResult:
    """Exhaustive search for ``pi`` with ``s^pi = s^-1`` and ``t^pi = t``.

    Backtracks over images of one point per component: once ``x -> y`` is
    chosen, ``pi`` is forced along ``x s -> y s^-1`` and ``x t -> y t``.
    Candidates are limited to points whose cycle length under ``s`` and
    whose fixedness under ``t`` match.
    """
    s, t = g.s, g.t
    s_inv = inverse(s)
    k = g.degree
    cyc_len = [0] * k
    for cyc in cycle_decomposition(s).cycles:
        for x in cyc:
            cyc_len[x] = len(cyc)
    for x in cycle_decomposition(s).fixed_points:
        cyc_len[x] = 1
    signature = [(cyc_len[x], t(x) == x) for x in range(k)]

    pi = [-1] * k
    used = [False] * k
    tried = 0

    def assign(x0: int, y0: int, trail: list) -> bool:
        stack = [(x0, y0)]
        while stack:
            x, y = stack.pop()
            if pi[x] != -1:
                if pi[x] != y:
                    return False
                continue
            if used[y] or signature[x] != signature[y]:
                return False
            pi[x] = y
            used[y] = True
            trail.append(x)
            stack.append((s(x), s_inv(y)))
            stack.append((s_inv(x), s(y)))
            stack.append((t(x), t(y)))
        return True

    def undo(trail: list) -> None:
        for x in trail:
            used[pi[x]] = False
            pi[x] = -1

    def search() -> bool:
        nonlocal tried
        try:
            x = pi.index(-1)
        except ValueError:
            return True
        for y in range(k):
            if used[y] or signature[x] != signature[y]:
                continue
            tried += 1
            if tried > bound:
                raise SearchTooLarge(f"relabelling search exceeded {bound} candidates")
            if _cancelled(cancel):
                raise Cancelled("relabelling search cancelled")
            trail: list = []
            if assign(x, y, trail) and search():
                return True
            undo(trail)
        return False

    if search():
        rel = Relabelling(Permutation(pi))
        if not rel.verify(s, t):
            raise AssertionError("relabelling failed verification")
        return ConjugationResult(rel, tried)
    return ConjugationResult(None, tried)


# --- abstract automorphism check -------------------------------------------


@dataclass(frozen=True)
class AbstractResult:
    reflexible: bool
    group_order: int
    method: str  # "cayley" or "diagonal"
    checked: int  # elements visited (cayley) or diagonal subgroup order

    def to_dict(self) -> dict:
        return {
            "reflexible": self.reflexible,
            "group_order": self.group_order,
            "method": self.method,
            "checked": self.checked,
        }


def _diagonal(p: Permutation, q: Permutation) -> Permutation:
    k = p.degree
    return Permutation(list(p.images) + [k + x for x in q.images])


def abstract_reflexibility(
    g: GeneratorSet,
    order_bound: int = DEFAULT_ORDER_BOUND,
    method: str = "cayley",
    cancel=None,
) -> AbstractResult:
    """Does ``s -> s^-1, t -> t`` extend to an automorphism of ``G``?

    ``method="cayley"`` walks the Cayley graph of ``G`` on ``{s, t}``,
    carrying the candidate image of each element and checking it whenever an
    element is reached again; it needs ``|G| <= order_bound``.
    ``method="diagonal"`` instead compares ``|<(s, s^-1), (t, t)>|`` with
    ``|G|`` through stabilizer chains: equality means the projection onto the
    first factor is injective, so the assignment is a well-defined
    homomorphism, and it is onto because ``s^-1`` and ``t`` generate ``G``.
    """
    s, t = g.s, g.t
    s_inv = inverse(s)
    n = group_order([s, t])
    if _cancelled(cancel):
        raise Cancelled("abstract check cancelled")
    if method == "diagonal":
        h = group_order([_diagonal(s, s_inv), _diagonal(t, t)], max_degree=2 * g.degree)
        return AbstractResult(h == n, n, "diagonal", h)
    if method != "cayley":
        raise ValueError(f"unknown method {method!r}")
    if n > order_bound:
        raise GroupTooLarge(f"|G| = {n} exceeds the bound {order_bound}")
    status, count = _accel.extend_homomorphism(
        [s.images, t.images], [s_inv.images, t.images], g.degree, n
    )
    if status < 0:
        raise AssertionError("Cayley walk overran the computed group order")
    return AbstractResult(status == 1 and count == n, n, "cayley", count)


# --- decision --------------------------------------------------------------


class Method(str, enum.Enum):
    LEMMA_2_6 = "lemma_2_6"
    LEMMA_2_7 = "lemma_2_7"
    CONJUGATION_SEARCH = "conjugation_search"
    ABSTRACT_ORACLE = "abstract_oracle"


@dataclass(frozen=True)
class ChiralityVerdict:
    chiral: bool
    method: Method
    lemma: LemmaWitness | None = None
    relabelling: Relabelling | None = None
    search: ConjugationResult | None = None
    abstract: AbstractResult | None = None
    caveat: str | None = None

    @property
    def verdict(self) -> str:
        return "chiral" if self.chiral else "reflexible"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method.value,
            "lemma": None if self.lemma is None else self.lemma.to_dict(),
            "relabelling": None if self.relabelling is None else str(self.relabelling.pi),
            "search": None
            if self.search is None
            else {"relabelling_found": self.search.reflexible, "candidates": self.search.candidates},
            "abstract": None if self.abstract is None else self.abstract.to_dict(),
            "caveat": self.caveat,
        }


def find_lemma_witness(g: GeneratorSet) -> LemmaWitness | None:
    """Try both lemmas on ``s``, then on ``r`` in its place."""
    for gen in ("s", "r"):
        for check in (check_lemma_2_6, check_lemma_2_7):
            w = check(g, generator=gen)
            if w is not None:
                return w
    return None


def _aut_is_sk(cls: GroupClassification) -> bool:
    return cls.verdict in (Verdict.ALTERNATING, Verdict.SYMMETRIC) and cls.degree >= 7


def decide_chirality(
    g: GeneratorSet,
    classification: GroupClassification,
    oracle: str = "auto",
    order_bound: int = DEFAULT_ORDER_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    cancel=None,
) -> ChiralityVerdict:
    """Combine the routes into one verdict.

    With ``G = A_k`` or ``S_k`` and ``k >= 7`` every automorphism is a
    relabelling, so the relabelling search decides and the lemmas serve as
    fast certificates that must agree with it.  Otherwise only the abstract
    check is trusted; a relabelling search result is attached as a caveat.
    ``oracle`` may force ``"conjugation"`` or ``"abstract"``.
    """
    if oracle not in ("auto", "conjugation", "abstract"):
        raise ValueError(f"unknown oracle {oracle!r}")
    sk = _aut_is_sk(classification)

    if oracle == "abstract":
        return _abstract_verdict(g, order_bound, cancel, caveat=None)

    search = conjugation_search(g, bound=search_bound, cancel=cancel)
    if sk or oracle == "conjugation":
        caveat = None
        if not sk:
            caveat = "relabelling search only; Aut(G) is not known to be S_k"
        if search.reflexible:
            lemma = find_lemma_witness(g) if sk else None
            if lemma is not None:
                raise OracleDisagreement(f"{lemma.lemma} certifies chirality but {search.relabelling.pi} inverts s")
            return ChiralityVerdict(
                False, Method.CONJUGATION_SEARCH, relabelling=search.relabelling, search=search, caveat=caveat
            )
        lemma = find_lemma_witness(g)
        if lemma is not None and sk:
            method = Method.LEMMA_2_6 if lemma.lemma == "L2_6" else Method.LEMMA_2_7
            return ChiralityVerdict(True, method, lemma=lemma, search=search)
        return ChiralityVerdict(True, Method.CONJUGATION_SEARCH, lemma=lemma, search=search, caveat=caveat)

    # small or unrecognised group: the abstract check decides
    note = "relabelling found" if search.reflexible else "no relabelling exists"
    caveat = (
        f"Aut(G) may exceed S_{g.degree}; abstract check is authoritative "
        f"(relabelling search: {note})"
    )
    v = _abstract_verdict(g, order_bound, cancel, caveat)
    return ChiralityVerdict(
        v.chiral, v.method, relabelling=v.relabelling, search=search, abstract=v.abstract, caveat=caveat
    )


def _abstract_verdict(g, order_bound, cancel, caveat) -> ChiralityVerdict:
    try:
        res = abstract_reflexibility(g, order_bound, "cayley", cancel)
    except GroupTooLarge:
        res = abstract_reflexibility(g, order_bound, "diagonal", cancel)
    return ChiralityVerdict(not res.reflexible, Method.ABSTRACT_ORACLE, abstract=res, caveat=caveat)
