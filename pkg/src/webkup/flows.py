"""Flow model and exact evaluation of ladder webs.

A flow decorates every edge of a web with a subset of the three colors
{-1, 0, +1}, of size equal to the edge label, conserving colors at every
junction.  Sweeping a ladder bottom to top, a slice moving `power` units
between adjacent columns moves a set X of that many colors, and each move
carries an integer weight; a flow contributes q^(total weight).

The boundary value (state) of a visible column is the sum of its color
set: a single strand shows its color, a double strand shows the sum of
its pair (equivalently minus the hidden third color).

The weights of single moves are pinned by three requirements:
  * the commutation identity for opposite ladder operators on two
    columns, whose diagonal is the quantum integer of the weight gap;
  * commutation of opposite operators on disjoint overlapping column
    pairs (three-column contexts);
  * mirror symmetry: reflecting a web top to bottom shifts every flow
    weight by the visible-strand count of the top minus the bottom.
Those determine the table up to relabeling the colors; the residual
freedom is fixed by requiring the distinguished flow of four small webs
(the two arcs and the two three-strand joins) to have weight zero.
`calibrate_weight_table` re-derives the table from scratch and reports
how many solutions survive at each stage; the result is frozen below in
PLUS_WEIGHTS and verified by tests and by scripts/calibrate_weights.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .qlaurent import LaurentPoly, ONE, qfact, qint
from .webs import LadderWeb, close, ell, visible_columns

COLORS = (-1, 0, 1)
FULL = frozenset(COLORS)


def vis(k: int) -> int:
    return 1 if k in (1, 2) else 0


def colorset_state(colors: frozenset) -> int:
    """Boundary state shown by a visible column carrying this color set."""
    if len(colors) not in (1, 2):
        raise ValueError(f"visible column needs 1 or 2 colors, got {set(colors)}")
    return sum(colors)


def colorset_for(weight: int, state: int) -> frozenset:
    """The unique color set of given size summing to the state."""
    if weight == 1:
        if state not in COLORS:
            raise ValueError(f"bad single-strand state {state}")
        return frozenset((state,))
    if weight == 2:
        return FULL - {-state}
    raise ValueError(f"column of weight {weight} has no visible state")


# ---------------------------------------------------------------------------
# frozen single-move weight table
#
# Key ('+' side only): (sorted tuple A, sorted tuple B, moved color x) with
# x in B, x not in A; the move carries x from the right column (set B) to
# the left column (set A).  Generated by calibrate_weight_table(); see
# scripts/calibrate_weights.py, which re-derives and asserts equality.
# ---------------------------------------------------------------------------

PLUS_WEIGHTS: dict[tuple[tuple[int, ...], tuple[int, ...], int], int] = {
    ((), (-1,), -1): 0,
    ((), (-1, 0), -1): -1,
    ((), (-1, 0), 0): 0,
    ((), (-1, 0, 1), -1): -2,
    ((), (-1, 0, 1), 0): -1,
    ((), (-1, 0, 1), 1): 0,
    ((), (-1, 1), -1): -1,
    ((), (-1, 1), 1): 0,
    ((), (0,), 0): 0,
    ((), (0, 1), 0): -1,
    ((), (0, 1), 1): 0,
    ((), (1,), 1): 0,
    ((-1,), (-1, 0), 0): 0,
    ((-1,), (-1, 0, 1), 0): -1,
    ((-1,), (-1, 0, 1), 1): 0,
    ((-1,), (-1, 1), 1): 0,
    ((-1,), (0,), 0): 0,
    ((-1,), (0, 1), 0): -1,
    ((-1,), (0, 1), 1): 0,
    ((-1,), (1,), 1): 0,
    ((-1, 0), (-1, 0, 1), 1): 0,
    ((-1, 0), (-1, 1), 1): 0,
    ((-1, 0), (0, 1), 1): 0,
    ((-1, 0), (1,), 1): 0,
    ((-1, 1), (-1, 0), 0): 1,
    ((-1, 1), (-1, 0, 1), 0): 0,
    ((-1, 1), (0,), 0): 1,
    ((-1, 1), (0, 1), 0): 0,
    ((0,), (-1,), -1): 1,
    ((0,), (-1, 0), -1): 0,
    ((0,), (-1, 0, 1), -1): -1,
    ((0,), (-1, 0, 1), 1): 0,
    ((0,), (-1, 1), -1): 0,
    ((0,), (-1, 1), 1): 0,
    ((0,), (0, 1), 1): 0,
    ((0,), (1,), 1): 0,
    ((0, 1), (-1,), -1): 2,
    ((0, 1), (-1, 0), -1): 1,
    ((0, 1), (-1, 0, 1), -1): 0,
    ((0, 1), (-1, 1), -1): 1,
    ((1,), (-1,), -1): 1,
    ((1,), (-1, 0), -1): 0,
    ((1,), (-1, 0), 0): 1,
    ((1,), (-1, 0, 1), -1): -1,
    ((1,), (-1, 0, 1), 0): 0,
    ((1,), (-1, 1), -1): 0,
    ((1,), (0,), 0): 1,
    ((1,), (0, 1), 0): 0,
}


def _key(A: frozenset, B: frozenset, x: int) -> tuple:
    return (tuple(sorted(A)), tuple(sorted(B)), x)


def plus_weight(A: frozenset, B: frozenset, x: int) -> int:
    return PLUS_WEIGHTS[_key(A, B, x)]


def minus_reflection(A: frozenset, B: frozenset, z: int) -> tuple[tuple, int]:
    """Mirror rule: a right-move is a reflected left-move plus the change
    in visible-strand count of the two columns involved."""
    shift = (vis(len(A)) + vis(len(B))) - (vis(len(A) - 1) + vis(len(B) + 1))
    return _key(A - {z}, B | {z}, z), shift


def minus_weight(A: frozenset, B: frozenset, z: int) -> int:
    key, shift = minus_reflection(A, B, z)
    return PLUS_WEIGHTS[key] + shift


def slice_weight(sign: str, A: frozenset, B: frozenset, x: int) -> int:
    return plus_weight(A, B, x) if sign == "+" else minus_weight(A, B, x)


# ---------------------------------------------------------------------------
# transitions, including divided powers
# ---------------------------------------------------------------------------


def _single_transitions(sign: str, A: frozenset, B: frozenset):
    if sign == "+":
        for x in sorted(B - A):
            yield frozenset((x,)), A | {x}, B - {x}, plus_weight(A, B, x)
    else:
        for z in sorted(A - B):
            yield frozenset((z,)), A - {z}, B | {z}, minus_weight(A, B, z)


@lru_cache(maxsize=None)
def _power_transitions(sign: str, power: int, A: frozenset, B: frozenset):
    """Moves of a power slice: list of (moved set X, weight).

    A power-a slice is the a-fold single slice divided by the quantum
    factorial [a]!; every entry of that matrix must come out as a plain
    power of q (checked loudly), which is the flow weight of the move.
    """
    if power == 1:
        return tuple((X, w) for X, nA, nB, w in _single_transitions(sign, A, B))
    paths: dict[frozenset, LaurentPoly] = {}

    def rec(curA, curB, moved, wsum, depth):
        if depth == power:
            key = frozenset(moved)
            paths[key] = paths.get(key, LaurentPoly.zero()) + LaurentPoly.monomial(wsum)
            return
        for X, nA, nB, w in _single_transitions(sign, curA, curB):
            rec(nA, nB, moved | X, wsum + w, depth + 1)

    rec(A, B, frozenset(), 0, 0)
    out = []
    fact = qfact(power)
    for X, poly in sorted(paths.items(), key=lambda kv: tuple(sorted(kv[0]))):
        mono = poly.exact_div(fact)
        if not mono.is_monomial_coeff_one():
            raise AssertionError(
                f"divided power entry is not a plain q power: {sign}^{power} "
                f"on {set(A)},{set(B)} moving {set(X)} gave {mono}"
            )
        out.append((X, mono.degree()))
    return tuple(out)


def slice_transitions(sign: str, power: int, A: frozenset, B: frozenset):
    """All (moved color set, weight) options for one slice on sets (A, B)."""
    return _power_transitions(sign, power, A, B)


# ---------------------------------------------------------------------------
# sweeping ladders
# ---------------------------------------------------------------------------


def start_config(lam: tuple[int, ...]) -> tuple[frozenset, ...]:
    cfg = []
    for v in lam:
        if v == 0:
            cfg.append(frozenset())
        elif v == 3:
            cfg.append(FULL)
        else:
            raise ValueError("sweep needs a closed bottom weight (entries 0/3)")
    return tuple(cfg)


def _apply_slice(vec: dict, s) -> dict:
    c = s.index - 1
    out: dict[tuple, LaurentPoly] = {}
    for cfg, poly in vec.items():
        A, B = cfg[c], cfg[c + 1]
        for X, w in slice_transitions(s.sign, s.power, A, B):
            if s.sign == "+":
                ncfg = cfg[:c] + (A | X, B - X) + cfg[c + 2 :]
            else:
                ncfg = cfg[:c] + (A - X, B | X) + cfg[c + 2 :]
            add = poly.shift(w)
            prev = out.get(ncfg)
            out[ncfg] = add if prev is None else prev + add
        # note: a slice with no legal move kills the configuration
    return {k: v for k, v in out.items() if not v.is_zero()}


def config_states(cfg, lam) -> tuple[int, ...]:
    return tuple(colorset_state(cfg[i]) for i in visible_columns(lam))


def expansion(web: LadderWeb) -> dict[tuple[int, ...], LaurentPoly]:
    """Boundary-state coefficients of a closed-bottom web.

    Maps each state string of the top boundary to an exact Laurent
    polynomial; the top configuration of a flow determines its states
    (and conversely, so no information is lost here).
    """
    vec = {start_config(web.bottom_weight): ONE}
    for s in web.slices:
        vec = _apply_slice(vec, s)
    top = web.top_weight
    out: dict[tuple[int, ...], LaurentPoly] = {}
    for cfg, poly in vec.items():
        out[config_states(cfg, top)] = poly
    return out


def bracket(web: LadderWeb) -> LaurentPoly:
    """Value of a closed web: the sum q^(weight) over all of its flows."""
    if not web.is_closed():
        raise ValueError("bracket needs a closed web")
    exp = expansion(web)
    if not exp:
        return LaurentPoly.zero()
    return exp[()]


@dataclass(frozen=True)
class Flow:
    """One flow on a ladder web: the color set moved by each slice."""

    web: LadderWeb
    moves: tuple[frozenset, ...]
    weight: int
    boundary: tuple[int, ...]


def enumerate_flows(web: LadderWeb, boundary=None) -> list[Flow]:
    """All flows of a closed-bottom web, optionally filtered by boundary."""
    top = web.top_weight
    out: list[Flow] = []

    def rec(idx, cfg, moves, wsum):
        if idx == len(web.slices):
            states = config_states(cfg, top)
            if boundary is None or states == boundary:
                out.append(Flow(web, tuple(moves), wsum, states))
            return
        s = web.slices[idx]
        c = s.index - 1
        A, B = cfg[c], cfg[c + 1]
        for X, w in slice_transitions(s.sign, s.power, A, B):
            if s.sign == "+":
                ncfg = cfg[:c] + (A | X, B - X) + cfg[c + 2 :]
            else:
                ncfg = cfg[:c] + (A - X, B | X) + cfg[c + 2 :]
            moves.append(X)
            rec(idx + 1, ncfg, moves, wsum + w)
            moves.pop()

    rec(0, start_config(web.bottom_weight), [], 0)
    return out


def flow_configs(flow: Flow) -> list[tuple[frozenset, ...]]:
    """Color configurations of a flow at every level, bottom first."""
    cfg = start_config(flow.web.bottom_weight)
    out = [cfg]
    for s, X in zip(flow.web.slices, flow.moves):
        c = s.index - 1
        if s.sign == "+":
            cfg = cfg[:c] + (cfg[c] | X, cfg[c + 1] - X) + cfg[c + 2 :]
        else:
            cfg = cfg[:c] + (cfg[c] - X, cfg[c + 1] | X) + cfg[c + 2 :]
        out.append(cfg)
    return out


def count_weight_zero_flows(web: LadderWeb, stop_at: int | None = None) -> int:
    """Number of weight-zero flows, with branch and bound pruning.

    Pruning uses per-slice weight windows: if the weight so far plus the
    best or worst achievable remainder cannot reach zero, the branch dies.
    Pass stop_at to return early once that many flows are found.
    """
    slices = web.slices
    lows, highs = [], []
    for s in slices:
        ws = [
            w
            for A in _subsets()
            for B in _subsets()
            for _, w in slice_transitions(s.sign, s.power, A, B)
        ]
        lows.append(min(ws))
        highs.append(max(ws))
    minfut = [0] * (len(slices) + 1)
    maxfut = [0] * (len(slices) + 1)
    for i in range(len(slices) - 1, -1, -1):
        minfut[i] = minfut[i + 1] + lows[i]
        maxfut[i] = maxfut[i + 1] + highs[i]

    count = 0

    def rec(idx, cfg, wsum):
        nonlocal count
        if stop_at is not None and count >= stop_at:
            return
        if wsum + minfut[idx] > 0 or wsum + maxfut[idx] < 0:
            return
        if idx == len(slices):
            count += 1
            return
        s = slices[idx]
        c = s.index - 1
        A, B = cfg[c], cfg[c + 1]
        for X, w in slice_transitions(s.sign, s.power, A, B):
            if s.sign == "+":
                ncfg = cfg[:c] + (A | X, B - X) + cfg[c + 2 :]
            else:
                ncfg = cfg[:c] + (A - X, B | X) + cfg[c + 2 :]
            rec(idx + 1, ncfg, wsum + w)

    rec(0, start_config(web.bottom_weight), 0)
    return count


@lru_cache(maxsize=1)
def _subsets() -> tuple[frozenset, ...]:
    out = []
    for mask in range(8):
        out.append(frozenset(c for i, c in enumerate(COLORS) if mask >> i & 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# pairings
# ---------------------------------------------------------------------------


def kuperberg_form(u: LadderWeb, v: LadderWeb) -> LaurentPoly:
    """Pairing by closing: q^(strand count) times the closed-web value."""
    sig = u.top_signs()
    return bracket(close(u, v)).shift(ell(sig))


def lusztig_form(u: LadderWeb, v: LadderWeb) -> LaurentPoly:
    """Normalized pairing: the boundary-coefficient dot product.

    Computed from the expansions; tests check it against the closed-web
    route q^(-strand count) * bracket(close(u, v)).
    """
    cu, cv = expansion(u), expansion(v)
    tot = LaurentPoly.zero()
    for k, a in cu.items():
        b = cv.get(k)
        if b is not None:
            tot = tot + a * b
    return tot


def kuperberg_form_vec(coeffs_u: dict, coeffs_v: dict, webs: dict) -> LaurentPoly:
    """Sesquilinear extension to web combinations (bar on left scalars)."""
    tot = LaurentPoly.zero()
    for ju, fu in coeffs_u.items():
        for jv, gv in coeffs_v.items():
            tot = tot + fu.bar() * gv * kuperberg_form(webs[ju], webs[jv])
    return tot


# ---------------------------------------------------------------------------
# calibration of the weight table
# ---------------------------------------------------------------------------


class _Constraint:
    """Polynomial identity sum(q^expr) - sum(q^expr) == rhs, where each
    expr is a sum of table variables plus a constant."""

    __slots__ = ("plus", "minus", "rhs", "vars", "tag")

    def __init__(self, plus, minus, rhs, tag):
        self.plus = plus
        self.minus = minus
        self.rhs = rhs
        self.tag = tag
        vs = set()
        for keys, _ in plus:
            vs.update(keys)
        for keys, _ in minus:
            vs.update(keys)
        self.vars = frozenset(vs)

    def check(self, assign) -> bool:
        acc: dict[int, int] = {}
        for keys, const in self.plus:
            e = const + sum(assign[k] for k in keys)
            acc[e] = acc.get(e, 0) + 1
        for keys, const in self.minus:
            e = const + sum(assign[k] for k in keys)
            acc[e] = acc.get(e, 0) - 1
        acc = {e: c for e, c in acc.items() if c}
        return acc == self.rhs


def _term_minus(A, B, z):
    key, shift = minus_reflection(A, B, z)
    return key, shift


def _gauge_webs():
    # the two arcs and the two three-strand joins, with the state string
    # of their distinguished (lex largest) flow
    return [
        (LadderWeb((0, 3), (("+", 1, 1),)), (1, -1)),
        (LadderWeb((3, 0), (("-", 1, 1),)), (1, -1)),
        (LadderWeb((3, 0, 0), (("-", 1, 1), ("-", 2, 1), ("-", 1, 1))), (1, 0, -1)),
        (LadderWeb((0, 3, 3), (("+", 1, 1), ("+", 2, 1), ("+", 1, 1))), (1, 0, -1)),
    ]


def _symbolic_flows(web: LadderWeb):
    """All flows of a closed-bottom web as lists of (sign, A, B, moved)."""
    out = []

    def rec(idx, cfg, refs):
        if idx == len(web.slices):
            out.append((cfg, list(refs)))
            return
        s = web.slices[idx]
        assert s.power == 1
        c = s.index - 1
        A, B = cfg[c], cfg[c + 1]
        pool = sorted(B - A) if s.sign == "+" else sorted(A - B)
        for x in pool:
            if s.sign == "+":
                ncfg = cfg[:c] + (A | {x}, B - {x}) + cfg[c + 2 :]
            else:
                ncfg = cfg[:c] + (A - {x}, B | {x}) + cfg[c + 2 :]
            refs.append((s.sign, A, B, x))
            rec(idx + 1, ncfg, refs)
            refs.pop()

    rec(0, start_config(web.bottom_weight), [])
    return out


def _refs_to_term(refs):
    keys, const = [], 0
    for sign, A, B, x in refs:
        if sign == "+":
            keys.append(_key(A, B, x))
        else:
            k, shift = _term_minus(A, B, x)
            keys.append(k)
            const += shift
    return tuple(keys), const


def build_constraints(with_gauge: bool = True) -> list[_Constraint]:
    cons: list[_Constraint] = []
    subsets = _subsets()

    # two-column commutation: opposite moves in either order differ by the
    # quantum integer of the weight gap on the diagonal
    for A in subsets:
        for B in subsets:
            per_target: dict[tuple, tuple[list, list]] = {}
            for z in sorted(A - B):
                A1, B1 = A - {z}, B | {z}
                for x in sorted(B1 - A1):
                    tgt = (A1 | {x}, B1 - {x})
                    mk, ms = _term_minus(A, B, z)
                    term = ((mk, _key(A1, B1, x)), ms)
                    per_target.setdefault(tgt, ([], []))[0].append(term)
            for x in sorted(B - A):
                A1, B1 = A | {x}, B - {x}
                for z in sorted(A1 - B1):
                    tgt = (A1 - {z}, B1 | {z})
                    mk, ms = _term_minus(A1, B1, z)
                    term = ((_key(A, B, x), mk), ms)
                    per_target.setdefault(tgt, ([], []))[1].append(term)
            targets = set(per_target) | {(A, B)}
            for tgt in sorted(targets, key=lambda t: (sorted(t[0]), sorted(t[1]))):
                plus, minus = per_target.get(tgt, ([], []))
                rhs = (
                    dict(qint(len(A) - len(B)).coeffs)
                    if tgt == (A, B)
                    else {}
                )
                if plus or minus or rhs:
                    cons.append(
                        _Constraint(plus, minus, rhs, f"comm2 {set(A)},{set(B)}")
                    )

    # three-column commutation: both generators move out of (or into) the
    # shared middle column, in either order, with equal weights
    for A in subsets:
        for B in subsets:
            for C in subsets:
                for x in sorted(B - A):
                    for z in sorted(B - C):
                        if x == z:
                            continue
                        mk1, s1 = _term_minus(B, C, z)
                        mk2, s2 = _term_minus(B - {x}, C, z)
                        cons.append(
                            _Constraint(
                                [((mk1, _key(A, B - {z}, x)), s1)],
                                [((_key(A, B, x), mk2), s2)],
                                {},
                                "comm3a",
                            )
                        )
                for z in sorted(A - B):
                    for x in sorted(C - B):
                        if x == z:
                            continue
                        mk1, s1 = _term_minus(A, B, z)
                        mk2, s2 = _term_minus(A, B | {x}, z)
                        cons.append(
                            _Constraint(
                                [((mk1, _key(B | {z}, C, x)), s1)],
                                [((_key(B, C, x), mk2), s2)],
                                {},
                                "comm3b",
                            )
                        )

    if with_gauge:
        for web, states in _gauge_webs():
            hits = []
            for cfg, refs in _symbolic_flows(web):
                if config_states(cfg, web.top_weight) == states:
                    hits.append(refs)
            if len(hits) != 1:
                raise AssertionError(
                    f"gauge web should have one distinguished flow, got {len(hits)}"
                )
            term = _refs_to_term(hits[0])
            cons.append(_Constraint([term], [], {0: 1}, "gauge"))
    return cons


def _all_var_keys() -> list[tuple]:
    out = []
    for A in _subsets():
        for B in _subsets():
            for x in sorted(B - A):
                out.append(_key(A, B, x))
    return sorted(out)


def calibrate_weight_table(
    with_gauge: bool = True,
    all_solutions: bool = False,
    domain: range = range(-6, 7),
    limit: int = 2000,
):
    """Solve the constraint system for the single-move weights.

    Returns a list of solution dicts (each mapping key -> int).  With
    all_solutions=False the search stops at the first solution.
    """
    cons = build_constraints(with_gauge)
    allvars = _all_var_keys()

    by_var: dict[tuple, list[_Constraint]] = {v: [] for v in allvars}
    for con in cons:
        for v in con.vars:
            by_var[v].append(con)

    # static order: walk constraints from fewest variables up, appending
    # unseen variables, so equations complete as early as possible
    order: list[tuple] = []
    seen = set()
    for con in sorted(cons, key=lambda c: (len(c.vars), c.tag)):
        for v in sorted(c for c in con.vars if c not in seen):
            seen.add(v)
            order.append(v)
    for v in allvars:
        if v not in seen:
            seen.add(v)
            order.append(v)

    remaining = {id(con): len(con.vars) for con in cons}
    assign: dict[tuple, int] = {}
    solutions: list[dict] = []

    def feasible(con) -> bool:
        return con.check(assign)

    def do_assign(v, val, trail) -> None:
        # counters must always be decremented in full so undo stays exact
        assign[v] = val
        trail.append(v)
        for con in by_var[v]:
            remaining[id(con)] -= 1

    def assign_var(v, val, trail) -> bool:
        do_assign(v, val, trail)
        queue = [v]
        while queue:
            w = queue.pop()
            for con in by_var[w]:
                if remaining[id(con)] == 0 and not feasible(con):
                    return False
            # single-free-variable propagation
            for con in by_var[w]:
                if remaining[id(con)] == 1:
                    free = next(u for u in con.vars if u not in assign)
                    hits = []
                    for d in domain:
                        assign[free] = d
                        if feasible(con):
                            hits.append(d)
                        del assign[free]
                    if not hits:
                        return False
                    if len(hits) == 1:
                        do_assign(free, hits[0], trail)
                        queue.append(free)
        return True

    def undo(trail):
        for v in trail:
            del assign[v]
            for con in by_var[v]:
                remaining[id(con)] += 1

    def search(pos) -> bool:
        while pos < len(order) and order[pos] in assign:
            pos += 1
        if pos == len(order):
            solutions.append(dict(assign))
            return not all_solutions or len(solutions) >= limit
        v = order[pos]
        for val in domain:
            trail: list[tuple] = []
            if assign_var(v, val, trail):
                if search(pos + 1):
                    undo(trail)
                    return True
            undo(trail)
        return False

    search(0)
    return solutions


def table_from_solution(sol: dict) -> dict:
    return dict(sorted(sol.items()))


def verify_frozen_table() -> None:
    """Check the frozen table against every calibration constraint."""
    for con in build_constraints(with_gauge=True):
        if not con.check(PLUS_WEIGHTS):
            raise AssertionError(f"frozen weight table violates {con.tag}")
