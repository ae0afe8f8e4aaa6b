"""The acceptance gate: thirteen checks, one line of output each.

Every check reduces a structural claim about the library to finite exact
computation: the two closed-web evaluators agree, the growth basis is
unitriangular and counted by independent oracles, the quantum group
relations hold on web vectors, the forms and the bar involution behave,
the root-of-unity block data is consistent, and the dual canonical
comparison plus its counterexample search run to a recorded frontier.

Sweeps marked "all boundaries" run over every plain sign string of the
stated size; padding by label-0 and label-3 strands is inert and is
witnessed separately by the enhanced strings included in criterion 13.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from .qlaurent import LaurentPoly, ONE, ZERO, qint
from .webs import (
    LadderWeb,
    Slice,
    close,
    empty_web,
    signs_of_weight,
    weight_of_signs,
    weights_bounded,
)
from .flows import bracket, enumerate_flows, expansion, lusztig_form
from .planar import PlanarWeb, rewrite_bracket
from .growth import construct_flow, dominant_states, growth, web_space
from .oracles import hook_content_dim, invariant_dim, ssyt_count
from .howe import (
    adjunction_holds,
    format_word,
    inverse_growth,
    phi_word,
    verify_relations,
)
from .tableaux import (
    center_dim,
    enumerate_fillings,
    filling_to_state,
    hat_weights,
    is_semistandard,
    satisfies_conds,
    state_to_filling,
)
from .dualcan import (
    dual_canonical_basis,
    default_budget,
    is_bar_invariant_vec,
    lusztig_form_vec,
    search_counterexample,
    strictly_below_one,
)

SEED = 20260816


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"AC{self.number:02d} {flag} ({self.elapsed:6.1f}s) {self.name}: {self.detail}"


def _result(number, name, fn) -> CriterionResult:
    t0 = time.time()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failure, not an abort
        return CriterionResult(number, name, False, f"error: {exc!r}", time.time() - t0)
    return CriterionResult(number, name, passed, detail, time.time() - t0)


def plain_boundaries(max_strands: int = 6, min_strands: int = 2):
    for n in range(min_strands, max_strands + 1):
        for tup in product("+-", repeat=n):
            yield "".join(tup)


# -- 1: the two evaluators agree --------------------------------------------


def criterion_1() -> CriterionResult:
    def check():
        t0 = time.time()
        pairs = 0
        for signs in plain_boundaries(6):
            space = web_space(signs)
            for u in space.basis.values():
                for v in space.basis.values():
                    w = close(u, v)
                    if bracket(w) != rewrite_bracket(w):
                        return False, f"evaluators disagree on a closure over {signs}"
                    pairs += 1
        took = time.time() - t0
        return took < 120.0, f"{pairs} closures agree, {took:.1f}s of 120s budget"

    return _result(1, "evaluator agreement", check)


# -- 2: ground-truth relations of the evaluation -----------------------------


def _square_faces(pw: PlanarWeb):
    out = []
    for cyc in pw.faces():
        if len(cyc) != 4:
            continue
        info = pw._face_info(cyc)
        eids = {e for e, _ in info}
        verts = [v for _, v in info]
        if len(eids) != 4 or len(set(verts)) != 4:
            continue
        kinds = [pw.nodes[v].kind for v in verts]
        if all(a != b for a, b in zip(kinds, kinds[1:] + kinds[:1])):
            out.append(cyc)
    return out


def criterion_2() -> CriterionResult:
    def check():
        circle = LadderWeb((0, 3), (Slice("+", 1), Slice("-", 1)))
        tripod = LadderWeb((3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1)))
        theta = close(tripod, tripod)
        if bracket(circle) != qint(3) or rewrite_bracket(circle) != qint(3):
            return False, "circle value is not [3]"
        if bracket(theta) != qint(2) * qint(3) or rewrite_bracket(theta) != qint(2) * qint(3):
            return False, "closed digon value is not [2][3]"

        rng = random.Random(SEED)
        boundaries = [s for s in plain_boundaries(6, 3) if web_space(s).basis]
        done = 0
        attempts = 0
        while done < 20:
            attempts += 1
            if attempts > 2000:
                return False, f"only {done} square-bearing webs found"
            signs = rng.choice(boundaries)
            space = web_space(signs)
            keys = sorted(space.basis)
            w = close(space.basis[rng.choice(keys)], space.basis[rng.choice(keys)])
            pw = PlanarWeb.from_ladder(w)
            if not pw.nodes:
                continue
            squares = _square_faces(pw)
            if not squares:
                continue
            sq = min(squares, key=lambda c: min(e for e, _ in c))
            pre = (qint(3) ** pw.loops) * (qint(2) ** pw.digons)
            a = pw.clone_bare()
            a.resolve_square(sq, 0)
            b = pw.clone_bare()
            b.resolve_square(sq, 1)
            if bracket(w) != pre * (a.evaluate() + b.evaluate()):
                return False, f"square identity fails on a closure over {signs}"
            done += 1
        return True, f"circle [3], digon [2][3], square identity on {done} webs"

    return _result(2, "circle, digon, square ground truths", check)


# -- 3: unitriangular nonnegative basis matrix --------------------------------


def criterion_3() -> CriterionResult:
    def check():
        webs = 0
        for signs in plain_boundaries(6):
            space = web_space(signs)
            dom = sorted(space.basis)
            for J in dom:
                exp = space.expansions[J]
                if exp.get(J) != ONE:
                    return False, f"diagonal entry at {signs} {J} is not 1"
                for Jp in dom:
                    c = exp.get(Jp, ZERO)
                    if Jp > J and not c.is_zero():
                        return False, f"entry above the diagonal at {signs} {J}"
                    if not c.is_nonnegative():
                        return False, f"negative entry at {signs} ({J},{Jp})"
                webs += 1
        return True, f"{webs} expansions unitriangular with entries in N[q,q^-1]"

    return _result(3, "unitriangularity and positivity", check)


# -- 4: the dominant flow is unique and weight zero ---------------------------


def criterion_4() -> CriterionResult:
    def check():
        webs = 0
        for signs in plain_boundaries(6):
            for J, w in web_space(signs).basis.items():
                flows = enumerate_flows(w, boundary=J)
                if len(flows) != 1:
                    return False, f"{len(flows)} flows extend {J} over {signs}"
                if flows[0].weight != 0:
                    return False, f"dominant flow weight {flows[0].weight} at {signs} {J}"
                webs += 1
        return True, f"{webs} basis webs each admit one weight-0 dominant flow"

    return _result(4, "canonical flow uniqueness", check)


# -- 5: basis counts against independent oracles ------------------------------


def criterion_5() -> CriterionResult:
    def check():
        boundaries = 0
        for signs in plain_boundaries(8):
            if len(web_space(signs).basis) != invariant_dim(signs):
                return False, f"basis count disagrees with tensor oracle at {signs}"
            boundaries += 1
        totals = []
        for n in (3, 6):
            shape = (3,) * (n // 3)
            tot = 0
            for mu in weights_bounded(n, n):
                b = len(web_space(signs_of_weight(mu)).basis)
                if b != ssyt_count(shape, mu):
                    return False, f"tableau count disagrees at weight {mu}"
                tot += b
            if tot != hook_content_dim(shape, n):
                return False, f"total over weights of {n} is {tot}"
            totals.append(tot)
        return True, (
            f"{boundaries} boundaries match the tensor oracle; "
            f"weight totals {totals[0]} and {totals[1]} match hook content"
        )

    return _result(5, "basis counts vs oracles", check)


# -- 6: quantum group relations on web vectors --------------------------------


def criterion_6() -> CriterionResult:
    def check():
        t0 = time.time()
        c3 = verify_relations(3, 3)
        c6 = verify_relations(6, 6)
        took = time.time() - t0
        if c3 != 536:
            return False, f"three-column relation count changed: {c3}"
        ok = took < 600.0
        return ok, f"{c3} + {c6} relation instances hold, {took:.1f}s of 600s budget"

    return _result(6, "generator relations", check)


# -- 7: inverse growth roundtrip ----------------------------------------------


def criterion_7() -> CriterionResult:
    def check():
        tripod = LadderWeb((3, 0, 0), (Slice("-", 1), Slice("-", 2), Slice("-", 1)))
        word, lam0 = inverse_growth(tripod)
        shown = format_word(word, lam0)
        if shown != "1_(1,1,1) E_{-1} E_{-2} E_{-1} 1_(3,0,0)":
            return False, f"worked example reads {shown}"
        done = 0
        for n in (3, 6):
            for mu in weights_bounded(n, n):
                signs = signs_of_weight(mu)
                for J, w in web_space(signs).basis.items():
                    word, lam0 = inverse_growth(w)
                    res = phi_word(word, empty_web(lam0))
                    if res is None or expansion(res) != expansion(w):
                        return False, f"roundtrip fails at weight {mu} state {J}"
                    done += 1
        return True, f"{done} roundtrips reproduce their webs; worked example matches"

    return _result(7, "inverse growth roundtrip", check)


# -- 8: forms, adjunction, bar invariance --------------------------------------


def _sample_words(signs: str, rng: random.Random):
    n = len(weight_of_signs(signs))
    words = [(Slice("+", 1),), (Slice("-", 1),)]
    for _ in range(2):
        length = rng.randint(2, 3)
        words.append(
            tuple(
                Slice(rng.choice("+-"), rng.randint(1, n - 1)) for _ in range(length)
            )
        )
    return words


def criterion_8() -> CriterionResult:
    def check():
        rng = random.Random(SEED)
        diag = 0
        closures = 0
        adjunctions = 0
        for signs in plain_boundaries(6):
            space = web_space(signs)
            for J, u in space.basis.items():
                exp = space.expansions[J]
                expect = ONE
                for k, c in exp.items():
                    if k != J:
                        expect = expect + c * c
                if lusztig_form(u, u) != expect:
                    return False, f"diagonal form value differs at {signs} {J}"
                diag += 1
            for u in space.basis.values():
                for v in space.basis.values():
                    if not bracket(close(u, v)).is_bar_invariant():
                        return False, f"closed value not bar-invariant over {signs}"
                    closures += 1
            if len(weight_of_signs(signs)) >= 2 and space.basis:
                for word in _sample_words(signs, rng):
                    if not adjunction_holds(signs, word):
                        return False, f"adjunction fails for a word on {signs}"
                    adjunctions += 1
        return True, (
            f"{diag} diagonal values are 1 + sum of squares, "
            f"{closures} closed values bar-invariant, {adjunctions} adjunctions"
        )

    return _result(8, "form identities and adjunction", check)


# -- 9: center dimension equals block count ------------------------------------


def criterion_9() -> CriterionResult:
    def check():
        if center_dim("+++") != 6 or center_dim("+-") != 3:
            return False, "frozen center dimensions changed"
        checked = 0
        for signs in plain_boundaries(6):
            boundaries = set()
            for w in web_space(signs).basis.values():
                boundaries.update(f.boundary for f in enumerate_flows(w))
            if len(boundaries) != center_dim(signs):
                return False, f"block count differs from center dimension at {signs}"
            checked += 1
        return True, f"{checked} boundaries; blocks = balanced fillings everywhere"

    return _result(9, "center dimensions", check)


# -- 10: semisimple bookkeeping at q = 1 ----------------------------------------


def criterion_10() -> CriterionResult:
    def check():
        for signs in plain_boundaries(6):
            space = web_space(signs)
            mult: dict = {}
            per_web = {}
            for J, w in space.basis.items():
                counts: dict = {}
                for f in enumerate_flows(w):
                    counts[f.boundary] = counts.get(f.boundary, 0) + 1
                per_web[J] = counts
                for b, c in counts.items():
                    mult[b] = mult.get(b, 0) + c
            lhs = 0
            for Ju, u in space.basis.items():
                for Jv, v in space.basis.items():
                    w = close(u, v)
                    colorings = len(enumerate_flows(w))
                    if colorings != bracket(w).eval_at_one():
                        return False, f"coloring count differs from q=1 value at {signs}"
                    lhs += colorings
            rhs = sum(c * c for c in mult.values())
            if lhs != rhs:
                return False, f"sum of squares fails at {signs}: {lhs} vs {rhs}"
        return True, "coloring counts match q=1 values; sum-of-squares holds everywhere"

    return _result(10, "root-of-unity bookkeeping", check)


# -- 11: dual canonical comparison ----------------------------------------------


def criterion_11() -> CriterionResult:
    def check():
        elements = 0
        corrections = 0
        for signs in plain_boundaries(6):
            db = dual_canonical_basis(signs)
            space = web_space(signs)
            for J, vec in db.elements.items():
                if vec.get(J) != ONE:
                    return False, f"leading coefficient at {signs} {J}"
                for k, v in vec.items():
                    if k != J and not strictly_below_one(v):
                        return False, f"off-leading coefficient at {signs} {J}"
                if not is_bar_invariant_vec(signs, vec):
                    return False, f"element not bar-invariant at {signs} {J}"
                # the web is the element plus corrections by smaller elements
                recon = dict(vec)
                for (Jw, Jp), d in db.d_matrix.items():
                    if Jw != J:
                        continue
                    if not d.is_nonnegative():
                        return False, f"negative change-of-basis entry at {signs}"
                    for k, v in db.elements[Jp].items():
                        recon[k] = recon.get(k, ZERO) + d * v
                    corrections += 1
                exp = {k: v for k, v in space.expansions[J].items() if not v.is_zero()}
                recon = {k: v for k, v in recon.items() if not v.is_zero()}
                if recon != exp:
                    return False, f"change of basis does not reconstruct {signs} {J}"
                elements += 1
            keys = sorted(db.elements)
            for J in keys:
                for K in keys:
                    f = lusztig_form_vec(db.elements[J], db.elements[K])
                    delta = ONE if J == K else ZERO
                    diff = f - delta
                    if not (diff.is_zero() or strictly_below_one(diff)):
                        return False, f"pairing off delta at {signs} ({J},{K})"
        return True, (
            f"{elements} elements bar-invariant and below-leading; "
            f"{corrections} correction entries, pairings in delta + q^-1 Z[q^-1]"
        )

    return _result(11, "dual canonical basis", check)


# -- 12: counterexample search ---------------------------------------------------


def criterion_12() -> CriterionResult:
    def check():
        budget = default_budget()
        rep = search_counterexample(max_strands=10, budget_s=budget)
        if rep.found:
            head = ", ".join(f"{s} {J}" for s, J in rep.found[:3])
            return True, f"found {len(rep.found)} discrepant webs: {head}"
        if rep.completed:
            return True, (
                f"complete through 10 strands: {rep.checked_webs} webs, none found, "
                f"{rep.elapsed:.0f}s"
            )
        return True, (
            f"inconclusive at budget {budget:.0f}s: {rep.checked_webs} webs, "
            f"frontier {rep.last_boundary}"
        )

    return _result(12, "counterexample search", check)


# -- 13: tableau dictionary -------------------------------------------------------


def _small_weight_signs():
    """Sign strings whose visible weights sum to at most 6, plus a few
    padded variants with inert label-0 and label-3 strands."""
    out = []
    for n in range(1, 7):
        for tup in product("+-", repeat=n):
            signs = "".join(tup)
            if sum(hat_weights(signs)) <= 6:
                out.append(signs)
    out.extend(["o+x-", "+o-", "x++o--"])
    return out


def criterion_13() -> CriterionResult:
    def check():
        roundtrips = 0
        for signs in _small_weight_signs():
            k = len(hat_weights(signs))
            space = web_space(signs)
            realized = set()
            for w in space.basis.values():
                realized.update(f.boundary for f in enumerate_flows(w))
            for J in product((1, 0, -1), repeat=k):
                f = state_to_filling(signs, J)
                if filling_to_state(signs, f) != J:
                    return False, f"roundtrip fails at {signs} {J}"
                roundtrips += 1
                ok = satisfies_conds(signs, J)
                if ok != (J in realized):
                    return False, f"flow existence mismatch at {signs} {J}"
                if ok and construct_flow(signs, J).flow.boundary != J:
                    return False, f"constructed flow misses its boundary at {signs} {J}"
            balanced = {filling_to_state(signs, f) for f in enumerate_fillings(signs)}
            if balanced != realized:
                return False, f"balanced fillings differ from flow boundaries at {signs}"
            for J in dominant_states(signs):
                if not is_semistandard(state_to_filling(signs, J)):
                    return False, f"dominant state not semistandard at {signs} {J}"
                grown = growth(signs, J)
                if grown.flow.weight != 0 or grown.flow.boundary != J:
                    return False, f"canonical flow wrong at {signs} {J}"
        return True, f"{roundtrips} roundtrips; existence and canonical-flow checks hold"

    return _result(13, "tableau dictionary", check)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
    13: criterion_13,
}


def run_all(numbers=None, out=print) -> list[CriterionResult]:
    chosen = sorted(CRITERIA) if numbers is None else sorted(numbers)
    results = []
    for k in chosen:
        res = CRITERIA[k]()
        out(res.line())
        results.append(res)
    failed = [r for r in results if not r.passed]
    out(
        f"{len(results) - len(failed)}/{len(results)} criteria pass"
        + (f"; failing: {', '.join(str(r.number) for r in failed)}" if failed else "")
    )
    return results
