"""Closed-form bounds and a report that checks a hypergraph against them.

Every bound is a rational part plus, for two of them, an integer multiple of
``x**2.5``. The half-integer power is bracketed with ``math.isqrt`` so that
verdicts never depend on floating point: a measured integer at or below
``floor_certified`` satisfies the bound, one above ``ceiling`` violates it,
and anything in between is reported as indeterminate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from .errors import PreconditionError
from .hypergraph import Hypergraph

DISPLAY_DIGITS = 64

SATISFIED = "satisfied"
VIOLATED = "violated"
INDETERMINATE = "indeterminate"

THEOREM = "theorem"
CONJECTURE = "conjecture"


@dataclass(frozen=True)
class BoundValue:
    name: str
    params: dict
    exact: Fraction | None
    floor_certified: int
    ceiling: int
    approx: Decimal
    status: str = THEOREM

    def verdict(self, measured: int) -> str:
        if measured <= self.floor_certified:
            return SATISFIED
        if measured > self.ceiling:
            return VIOLATED
        if self.exact is not None:
            return SATISFIED if measured <= self.exact else VIOLATED
        return INDETERMINATE

    @property
    def display(self) -> str:
        return f"{self.approx:.10f}"

    def exact_str(self) -> str | None:
        return None if self.exact is None else str(self.exact)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "exact": self.exact_str(),
            "floor_certified": self.floor_certified,
            "ceiling": self.ceiling,
            "display": self.display,
            "status": self.status,
        }


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _decimal(x: Fraction) -> Decimal:
    return Decimal(x.numerator) / Decimal(x.denominator)


def _value(
    name: str,
    params: dict,
    rational: Fraction,
    coeff: int = 0,
    base: int = 0,
    status: str = THEOREM,
) -> BoundValue:
    """``rational + coeff * base**2.5`` with a certified integer bracket."""
    rational = Fraction(rational)
    with localcontext() as ctx:
        ctx.prec = DISPLAY_DIGITS
        approx = _decimal(rational)
        if coeff:
            approx += coeff * base * base * Decimal(base).sqrt()
    if not coeff or base == 0:
        return BoundValue(name, params, rational, math.floor(rational), _ceil(rational), +approx, status)
    # coeff * base**2.5 == sqrt(coeff**2 * base**5)
    radicand = coeff * coeff * base**5
    low = math.isqrt(radicand)
    if low * low == radicand:
        exact = rational + low
        return BoundValue(name, params, exact, math.floor(exact), _ceil(exact), approx, status)
    return BoundValue(
        name, params, None, math.floor(rational + low), _ceil(rational + low + 1), approx, status
    )


def furedi_size_bound(k: int, delta: int) -> BoundValue:
    """Edges of an intersecting k-graph with maximum degree ``delta``."""
    if k < 1 or delta < 0:
        raise PreconditionError("need k >= 1 and delta >= 0")
    return _value("furedi-size", {"k": k, "delta": delta}, (k - 1 + Fraction(1, k)) * delta)


def deza_size_bound(k: int, lam: int) -> BoundValue:
    if not 0 <= lam < k:
        raise PreconditionError("need 0 <= lambda < k")
    mu = k - lam
    return _value("deza-size", {"k": k, "lambda": lam}, max(lam * (lam + 1) + 1, mu * (mu + 1) + 1))


def furedi_order_bound(k: int, delta: int) -> BoundValue:
    if k < 1 or delta < 0:
        raise PreconditionError("need k >= 1 and delta >= 0")
    value = Fraction(k * k * delta, 4) + Fraction(3, 2) * math.comb(2 * k - 2, k - 1)
    return _value("furedi-order", {"k": k, "delta": delta}, value)


def majumder_kernel_bound(k: int) -> BoundValue:
    if k < 1:
        raise PreconditionError("need k >= 1")
    return _value("majumder-kernel", {"k": k}, Fraction(3, 2) * math.comb(2 * k - 2, k - 1))


def ord_ker_bound_1_intersecting(k: int) -> BoundValue:
    """Order plus minimum kernel of a non-sunflower 1-intersecting k-graph."""
    if k < 1:
        raise PreconditionError("need k >= 1")
    return _value("ord-ker", {"k": k}, Fraction(4 * k**3, 27), coeff=4, base=k)


def deza_order_f(k: int, lam: int) -> BoundValue:
    """Explicit-constant order bound for non-sunflower lambda-intersecting k-graphs."""
    if not 0 <= lam < k:
        raise PreconditionError("need 0 <= lambda < k")
    mu = k - lam
    rational = Fraction(4 * mu**3, 27) + 4 * lam * mu**2 + 1000 * lam * mu + 30000 * mu
    return _value("deza-order", {"k": k, "lambda": lam}, rational, coeff=100, base=mu)


def sps_size_bound(n: int) -> BoundValue:
    if n < 4:
        raise PreconditionError("the (2, n) pair-count bound holds for n >= 4 only")
    return _value("sps-size", {"n": n}, (n // 2 + 1) * (-(-n // 2) + 1))


def sps_order_bound(n: int) -> BoundValue:
    """Order of a (2, n)-bounded 1-cross-intersecting SPS; exceeded at n = 1, see ``sps_report``."""
    if n < 1:
        raise PreconditionError("need n >= 1")
    return _value("sps-order", {"n": n}, Fraction((n + 3) ** 3, 27) + Fraction(n + 3, 3))


def hall_conjecture_bound(k: int, lam: int) -> BoundValue:
    """Conjectured edge bound for non-trivial lambda-intersecting k-graphs."""
    if lam < 1 or k <= lam:
        raise PreconditionError("need 1 <= lambda < k")
    return _value("hall", {"k": k, "lambda": lam}, Fraction(k * (k - 1), lam) + 1, status=CONJECTURE)


def nontrivial_order_question(k: int, lam: int) -> BoundValue:
    """Leading term 4k^3/(27 lambda) of the open order question; never a pass/fail check."""
    if lam < 1 or k <= lam:
        raise PreconditionError("need 1 <= lambda < k")
    return _value("nontrivial-order", {"k": k, "lambda": lam}, Fraction(4 * k**3, 27 * lam), status=CONJECTURE)


@dataclass(frozen=True)
class TheoremSpec:
    func: Callable[..., BoundValue]
    params: tuple[str, ...]
    quantity: str
    summary: str


THEOREMS: dict[str, TheoremSpec] = {
    "furedi-size": TheoremSpec(furedi_size_bound, ("k", "delta"), "edges", "(k-1+1/k)*delta"),
    "deza-size": TheoremSpec(deza_size_bound, ("k", "lambda"), "edges", "max{l(l+1)+1, (k-l)(k-l+1)+1}"),
    "furedi-order": TheoremSpec(furedi_order_bound, ("k", "delta"), "order", "k^2*delta/4 + 3/2*C(2k-2,k-1)"),
    "majumder-kernel": TheoremSpec(majumder_kernel_bound, ("k",), "kernel", "3/2*C(2k-2,k-1)"),
    "ord-ker": TheoremSpec(ord_ker_bound_1_intersecting, ("k",), "order+kernel", "4k^3/27 + 4k^(5/2)"),
    "deza-order": TheoremSpec(deza_order_f, ("k", "lambda"), "order", "f(k, lambda) with mu = k - lambda"),
    "sps-size": TheoremSpec(sps_size_bound, ("n",), "pairs", "(floor(n/2)+1)(ceil(n/2)+1)"),
    "sps-order": TheoremSpec(sps_order_bound, ("n",), "order", "(n+3)^3/27 + (n+3)/3"),
    "hall": TheoremSpec(hall_conjecture_bound, ("k", "lambda"), "edges", "k(k-1)/lambda + 1 (conjecture)"),
    "nontrivial-order": TheoremSpec(nontrivial_order_question, ("k", "lambda"), "order", "4k^3/(27 lambda) (open question)"),
}


def evaluate(theorem: str, **params) -> BoundValue:
    try:
        spec = THEOREMS[theorem]
    except KeyError:
        raise PreconditionError(f"unknown theorem {theorem!r}; choose from {sorted(THEOREMS)}") from None
    missing = [p for p in spec.params if params.get(p) is None]
    if missing:
        raise PreconditionError(f"{theorem} needs {', '.join('--' + p for p in missing)}")
    key = {"lambda": "lam"}
    return spec.func(**{key.get(p, p): params[p] for p in spec.params})


@dataclass
class BoundEntry:
    name: str
    quantity: str
    applicable: bool
    value: BoundValue | None = None
    measured: int | None = None
    verdict: str | None = None
    reason: str = ""

    @property
    def status(self) -> str:
        return self.value.status if self.value else THEOREM

    @property
    def equality(self) -> bool:
        return bool(self.value and self.value.exact is not None and self.measured == self.value.exact)

    def to_dict(self) -> dict:
        out = {"name": self.name, "quantity": self.quantity, "applicable": self.applicable}
        if self.applicable:
            out.update(
                measured=self.measured,
                verdict=self.verdict,
                equality=self.equality,
                status=self.status,
                value=self.value.to_dict(),
            )
        else:
            out["reason"] = self.reason
        return out


@dataclass
class BoundReport:
    stats: dict
    entries: list[BoundEntry] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def add(self, name: str, measured: int | None, value_fn, reason: str | None) -> None:
        quantity = THEOREMS[name].quantity
        if reason is not None:
            self.entries.append(BoundEntry(name, quantity, False, reason=reason))
            return
        value = value_fn()
        self.entries.append(BoundEntry(name, quantity, True, value, measured, value.verdict(measured)))

    @property
    def checked(self) -> list[BoundEntry]:
        """Applicable entries backed by a theorem (conjectures excluded)."""
        return [e for e in self.entries if e.applicable and e.status == THEOREM]

    @property
    def violations(self) -> list[BoundEntry]:
        return [e for e in self.checked if e.verdict == VIOLATED]

    @property
    def indeterminate(self) -> list[BoundEntry]:
        return [e for e in self.checked if e.verdict == INDETERMINATE]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "stats": dict(self.stats),
            "passed": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }

    def rows(self) -> list[dict]:
        """Flat table for CSV output."""
        rows = []
        for e in self.entries:
            if not e.applicable:
                continue
            v = e.value
            rows.append(
                {
                    "bound": e.name,
                    "params": " ".join(f"{k}={x}" for k, x in v.params.items()),
                    "quantity": e.quantity,
                    "measured": e.measured,
                    "exact": v.exact_str() or "",
                    "floor_certified": v.floor_certified,
                    "ceiling": v.ceiling,
                    "display": v.display,
                    "verdict": e.verdict,
                    "status": v.status,
                }
            )
        return rows


def bound_report(
    h: Hypergraph,
    lam: int | None = None,
    kernel: int | None = None,
    *,
    kernel_search_limit: int = 16,
) -> BoundReport:
    """Measure ``h`` and check it against every bound whose hypotheses it meets.

    ``kernel`` is the minimum kernel size if already known. Otherwise it is
    taken from the degree rule for 1-intersecting inputs, or from an exact
    search when the support has at most ``kernel_search_limit`` vertices.
    """
    from .kernel import kernel_degree_rule, min_kernel_exact

    k = h.uniformity
    m = h.m
    intersecting = h.is_intersecting()
    sunflower = h.is_sunflower()
    if lam is None and m >= 2:
        lam = h.infer_lambda()
    lam_ok = lam is not None and (m < 2 or h.is_lambda_intersecting(lam))
    kernel_source = "supplied" if kernel is not None else None
    if kernel is None and intersecting and m >= 1:
        if lam_ok and lam == 1 and m >= 2:
            kernel, kernel_source = len(kernel_degree_rule(h)), "degree-rule"
        elif h.order <= kernel_search_limit:
            kernel, kernel_source = min_kernel_exact(h).size, "exact"

    report = BoundReport(
        stats={
            "k": k,
            "lambda": lam if lam_ok else None,
            "m": m,
            "max_degree": h.max_degree,
            "order": h.order,
            "kernel": kernel,
            "kernel_source": kernel_source,
            "intersecting": intersecting,
            "lambda_intersecting": lam_ok,
            "sunflower": sunflower,
            "trivial_intersecting": h.is_trivial_intersecting(),
        }
    )

    base = None
    if k is None:
        base = "not uniform"
    elif not intersecting:
        base = "not intersecting"
    delta = h.max_degree
    report.add("furedi-size", m, lambda: furedi_size_bound(k, delta), base)
    report.add("furedi-order", h.order, lambda: furedi_order_bound(k, delta), base)
    report.add(
        "majumder-kernel",
        kernel,
        lambda: majumder_kernel_bound(k),
        base or (None if kernel is not None else "kernel unknown"),
    )

    lam_reason = base
    if lam_reason is None:
        if not lam_ok:
            lam_reason = "not lambda-intersecting"
        elif lam < 1 or lam >= k:
            lam_reason = f"needs 1 <= lambda < k (lambda={lam}, k={k})"
    deza_reason = lam_reason or ("is a sunflower" if sunflower else None)
    report.add("deza-size", m, lambda: deza_size_bound(k, lam), deza_reason)
    report.add("deza-order", h.order, lambda: deza_order_f(k, lam), deza_reason)

    ok_reason = deza_reason
    if ok_reason is None and lam != 1:
        ok_reason = "not 1-intersecting"
    if ok_reason is None and kernel is None:
        ok_reason = "kernel unknown"
    report.add(
        "ord-ker",
        None if kernel is None else h.order + kernel,
        lambda: ord_ker_bound_1_intersecting(k),
        ok_reason,
    )

    hall_reason = lam_reason or ("trivial intersecting" if h.is_trivial_intersecting() else None)
    report.add("hall", m, lambda: hall_conjecture_bound(k, lam), hall_reason)
    return report
