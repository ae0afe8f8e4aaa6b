"""Dual canonical vectors and their comparison with basis webs.

Construction by upper-triangular correction: walk the dominant state
strings upward; start from the basis web's coordinate vector and, for
each smaller dominant string, subtract the bar-symmetric top of its
coefficient times the already-built element, leaving every coefficient
below the leading one inside q^-1 Z[q^-1].  All ingredients are fixed by
the bar involution, so the result is too.

Basis webs often coincide with these vectors but need not; the search
walks boundaries in increasing size looking for a web with a second
weight-zero flow, then confirms the discrepancy against the constructed
element.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .qlaurent import LaurentPoly, ONE
from .flows import count_weight_zero_flows, expansion
from .growth import dominant_states, growth, web_space


def bar_symmetric_top(p: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant polynomial agreeing with p in all
    exponents >= 0."""
    out = {}
    for e, c in p.coeffs.items():
        if e > 0:
            out[e] = c
            out[-e] = out.get(-e, 0) + c
        elif e == 0:
            out[0] = out.get(0, 0) + c
    return LaurentPoly(out)


def strictly_below_one(p: LaurentPoly) -> bool:
    """All exponents <= -1."""
    return all(e <= -1 for e in p.coeffs)


def lusztig_form_vec(u: dict, v: dict) -> LaurentPoly:
    """Coordinatewise pairing of two state-coefficient vectors."""
    out = LaurentPoly.zero()
    for k, a in u.items():
        b = v.get(k)
        if b is not None:
            out = out + a * b
    return out


@dataclass
class DualBasis:
    signs: str
    elements: dict = field(default_factory=dict)  # J -> state vector
    d_matrix: dict = field(default_factory=dict)  # (J, J') -> poly


@lru_cache(maxsize=None)
def dual_canonical_basis(signs: str) -> DualBasis:
    space = web_space(signs)
    order = sorted(space.basis)  # increasing, so corrections exist already
    db = DualBasis(signs)
    for J in order:
        vec = dict(space.expansions[J])
        for Jp in sorted((k for k in db.elements if k < J), reverse=True):
            c = vec.get(Jp)
            if c is None:
                continue
            f = bar_symmetric_top(c)
            if f.is_zero():
                continue
            db.d_matrix[(J, Jp)] = f
            for k, v in db.elements[Jp].items():
                nv = vec.get(k, LaurentPoly.zero()) - f * v
                if nv.is_zero():
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        assert vec.get(J) == ONE, f"leading coefficient corrupted at {J}"
        for k, v in vec.items():
            if k != J and not strictly_below_one(v):
                raise AssertionError(
                    f"correction failed: coefficient at {k} of element {J} "
                    f"is {v}"
                )
        db.elements[J] = vec
    return db


def apply_bar(signs: str, vec: dict) -> dict:
    """Bar involution in state coordinates: fix the basis webs, conjugate
    the web-basis coefficients."""
    space = web_space(signs)
    coords = space.reduce_to_basis(vec)
    out: dict = {}
    for J, c in coords.items():
        cb = c.bar()
        for k, v in space.expansions[J].items():
            nv = out.get(k, LaurentPoly.zero()) + cb * v
            if nv.is_zero():
                out.pop(k, None)
            else:
                out[k] = nv
    return out


def is_bar_invariant_vec(signs: str, vec: dict) -> bool:
    clean = {k: v for k, v in vec.items() if not v.is_zero()}
    return apply_bar(signs, clean) == clean


def web_matches_dual_canonical(signs: str, J: tuple[int, ...]) -> bool:
    db = dual_canonical_basis(signs)
    space = web_space(signs)
    exp = {k: v for k, v in space.expansions[J].items() if not v.is_zero()}
    return exp == db.elements[J]


# ---------------------------------------------------------------------------
# counterexample search
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    found: list  # (signs, states) with web != dual canonical element
    checked_webs: int
    last_boundary: str | None
    completed: bool
    elapsed: float

    def summary(self) -> str:
        lines = []
        if self.found:
            for signs, J in self.found:
                lines.append(f"counterexample: boundary {signs} state {J}")
        else:
            lines.append("no counterexample found")
        status = "complete" if self.completed else "budget exhausted"
        lines.append(
            f"{status}: {self.checked_webs} webs checked, "
            f"last boundary {self.last_boundary}, {self.elapsed:.1f}s"
        )
        return "\n".join(lines)


def default_budget() -> float:
    return float(os.environ.get("WEBKUP_SEARCH_BUDGET", "1800"))


def search_counterexample(
    max_strands: int = 10,
    budget_s: float | None = None,
    stop_at_first: bool = False,
) -> SearchReport:
    """Scan plain boundaries by size for a basis web with more than one
    weight-zero flow, then confirm against the dual canonical element."""
    budget = default_budget() if budget_s is None else budget_s
    t0 = time.time()
    found = []
    checked = 0
    last = None
    for n in range(2, max_strands + 1):
        for signs in ("".join(p) for p in product("+-", repeat=n)):
            if time.time() - t0 > budget:
                return SearchReport(found, checked, last, False, time.time() - t0)
            last = signs
            for J in dominant_states(signs):
                web = growth(signs, J).web
                checked += 1
                if count_weight_zero_flows(web, stop_at=2) > 1:
                    if not web_matches_dual_canonical(signs, J):
                        found.append((signs, J))
                        if stop_at_first:
                            return SearchReport(
                                found, checked, last, False, time.time() - t0
                            )
    return SearchReport(found, checked, last, True, time.time() - t0)
