"""End-to-end verification of one type, packaged as a JSON-stable report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from .chirality import DEFAULT_ORDER_BOUND, DEFAULT_SEARCH_BOUND, decide_chirality
from .constructions import ConstructionPlan, GeneratorSet, build, dispatch
from .groups import Verdict, classify, degree_cap, is_transitive
from .maps import build_record
from .perm import Parity, compose, format_cycles

__all__ = ["VerificationReport", "verify_generators", "verify_type", "PASS", "FAIL", "UNSUPPORTED", "SKIPPED"]

PASS = "PASS"
FAIL = "FAIL"
UNSUPPORTED = "UNSUPPORTED"
SKIPPED = "SKIPPED"


@dataclass
class VerificationReport:
    requested_type: list
    plan: dict | None = None
    generators: dict | None = None
    labels: list | None = None
    degree: int | None = None
    order_checks: list = field(default_factory=list)
    parity_checks: list = field(default_factory=list)
    transitive: bool | None = None
    primitive: bool | None = None
    classification: dict | None = None
    chirality: dict | None = None
    map_record: dict | None = None
    overall: str = FAIL
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**d)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    def checks_passed(self) -> bool:
        """Every individual check, ignoring the chirality and group verdicts."""
        return (
            all(c["passed"] for c in self.order_checks)
            and all(c["passed"] for c in self.parity_checks)
            and bool(self.order_checks)
            and bool(self.parity_checks)
            and self.transitive is True
            and self.primitive is True
            and self.map_record is not None
            and not self.map_record.get("failures")
        )

    def summary(self) -> str:
        m, n = self.requested_type
        head = f"{{{m},{n}}}: {self.overall}"
        if self.plan and self.plan.get("params"):
            head += f"  {self.plan['params']['construction']}"
        elif self.plan and self.plan.get("theorem"):
            head += f"  ({self.plan['theorem']})"
        if self.degree is not None:
            head += f"  degree {self.degree}"
        if self.classification:
            c = self.classification
            group = {"alternating": "A", "symmetric": "S"}.get(c["verdict"])
            head += f"  {group}{c['degree']}" if group else "  other"
        if self.chirality:
            head += f"  {self.chirality['verdict']} via {self.chirality['method']}"
        if self.map_record:
            head += f"  genus {self.map_record['genus']}"
        if self.error:
            head += f"  error: {self.error}"
        return head


def _order_check(name: str, p, expected: int) -> dict:
    actual = p.order()
    return {"element": name, "expected": expected, "actual": actual, "passed": actual == expected}


def verify_generators(
    g: GeneratorSet,
    plan: ConstructionPlan | None = None,
    *,
    requested: tuple[int, int] | None = None,
    oracle: str = "auto",
    max_degree: int | None = None,
    order_bound: int = DEFAULT_ORDER_BOUND,
    search_bound: int = DEFAULT_SEARCH_BOUND,
    cancel=None,
) -> VerificationReport:
    """Run every check on ``g`` and decide the overall outcome."""
    m, n = g.type.m, g.type.n
    rep = VerificationReport(
        requested_type=list(requested or (m, n)),
        plan=None if plan is None else plan.to_dict(),
        generators={x: format_cycles(g.element(x)) for x in ("s", "t", "r")},
        labels=list(g.labels.labels),
        degree=g.degree,
    )
    st = compose(g.s, g.t)
    rep.order_checks = [
        _order_check("s", g.s, n),
        _order_check("t", g.t, 2),
        _order_check("st", st, m),
    ]
    rel = compose(g.r, st).is_identity()
    rep.order_checks.append({"element": "rst", "expected": 1, "actual": 1 if rel else 0, "passed": rel})
    rep.parity_checks = [
        {"element": x, "parity": g.element(x).parity().value, "passed": g.element(x).parity() is Parity.EVEN}
        for x in ("s", "t")
    ]
    gens = g.generators()
    rep.transitive = is_transitive(gens)
    cls = classify(gens, named={"s": g.s, "t": g.t, "r": g.r}, max_degree=max_degree)
    rep.primitive = cls.primitive
    rep.classification = cls.to_dict()
    ch = None
    if rep.transitive:
        ch = decide_chirality(g, cls, oracle=oracle, order_bound=order_bound, search_bound=search_bound, cancel=cancel)
        rep.chirality = ch.to_dict()
    if cls.order is not None:
        rec = build_record(g, cls, ch)
        rep.map_record = rec.to_dict() | {"failures": rec.invariant_failures()}
    ok = (
        rep.checks_passed()
        and cls.verdict is Verdict.ALTERNATING
        and cls.degree == g.degree
        and ch is not None
        and ch.chiral
    )
    rep.overall = PASS if ok else FAIL
    return rep


def verify_type(
    m: int,
    n: int,
    *,
    oracle: str = "auto",
    degree_limit: int | None = None,
    cancel=None,
) -> tuple[VerificationReport, GeneratorSet | None]:
    """Dispatch, build and verify ``{m, n}``.

    Raises :class:`NotHyperbolic` for spherical or toroidal types.  When the
    built degree exceeds ``degree_limit`` the report is marked SKIPPED.
    """
    plan = dispatch((m, n))
    if not plan.supported:
        return VerificationReport(requested_type=[m, n], plan=plan.to_dict(), overall=UNSUPPORTED), None
    g = build(plan)
    cap = degree_cap() if degree_limit is None else degree_limit
    if g.degree > cap:
        rep = VerificationReport(
            requested_type=[m, n],
            plan=plan.to_dict(),
            generators={x: format_cycles(g.element(x)) for x in ("s", "t", "r")},
            labels=list(g.labels.labels),
            degree=g.degree,
            overall=SKIPPED,
            error=f"degree {g.degree} exceeds cap {cap}",
        )
        return rep, g
    return verify_generators(g, plan, requested=(m, n), oracle=oracle, max_degree=cap, cancel=cancel), g
