"""Ladder-rung action of the idempotented quantum gl_n on web spaces.

A generator raises or lowers one unit of column weight between adjacent
columns, which on webs is exactly appending a ladder rung on top; the
divided power appends a heavier rung.  Words are tuples of Slice tokens
stored in application order (word[0] acts first).  A word kills a web
when some step would push a column weight outside 0..3.

Operator identities are checked as linear maps: webs with equal boundary
are compared through their flow expansions, which are faithful
coordinates on the invariant space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .qlaurent import LaurentPoly, ONE, qint, qbinom
from .webs import (
    LadderWeb,
    Slice,
    empty_web,
    signs_of_weight,
    weight_of_signs,
    weights_bounded,
)
from .flows import _apply_slice, start_config, kuperberg_form
from .growth import web_space

Word = tuple[Slice, ...]


def step_weight(lam: tuple[int, ...], s: Slice):
    """Weight after one rung, or None if it leaves 0..3."""
    c = s.index - 1
    if not 1 <= s.index <= len(lam) - 1:
        raise ValueError(f"slice index out of range: {s}")
    d = s.power if s.sign == "+" else -s.power
    a, b = lam[c] + d, lam[c + 1] - d
    if not (0 <= a <= 3 and 0 <= b <= 3):
        return None
    return lam[:c] + (a, b) + lam[c + 2 :]


def word_target(lam: tuple[int, ...], word: Word):
    for s in word:
        lam = step_weight(lam, s)
        if lam is None:
            return None
    return lam


def phi_word(word: Word, web: LadderWeb):
    """Apply a word to a web from the top; None when the word kills it."""
    lam = web.top_weight
    for s in word:
        lam = step_weight(lam, s)
        if lam is None:
            return None
        web = web.append_slice(s)
    return web


# ---------------------------------------------------------------------------
# fast vector form: act on cached flow-expansion vectors
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _basis_vectors(signs: str):
    """Config vector of every basis web of a boundary, keyed by state."""
    out = {}
    for J, w in web_space(signs).basis.items():
        vec = {start_config(w.bottom_weight): ONE}
        for s in w.slices:
            vec = _apply_slice(vec, s)
        out[J] = vec
    return out


def _act(word: Word, lam, vec):
    """(weight, vector) after a word, or None when killed."""
    for s in word:
        lam = step_weight(lam, s)
        if lam is None:
            return None
        vec = _apply_slice(vec, s)
    return lam, vec


def combo_action(combo, lam, vec):
    """Apply a formal combination [(coeff, word), ...]; all surviving
    words must land on one common weight (asserted)."""
    target = None
    total: dict = {}
    for coeff, word in combo:
        if coeff.is_zero():
            continue
        res = _act(word, lam, vec)
        if res is None:
            continue
        tlam, tvec = res
        if target is None:
            target = tlam
        else:
            assert target == tlam, "combination mixes target weights"
        for cfg, poly in tvec.items():
            acc = total.get(cfg, LaurentPoly.zero()) + coeff * poly
            if acc.is_zero():
                total.pop(cfg, None)
            else:
                total[cfg] = acc
    return target, total


def combos_equal_on(signs: str, lhs, rhs) -> bool:
    """Compare two formal combinations on every basis web of a boundary."""
    lam = weight_of_signs(signs)
    for _J, vec in _basis_vectors(signs).items():
        _, a = combo_action(lhs, lam, vec)
        _, b = combo_action(rhs, lam, vec)
        if a != b:
            return False
    return True


# ---------------------------------------------------------------------------
# defining relations
# ---------------------------------------------------------------------------


def _bar_lam(lam, i):
    # difference of the two column weights a generator at i sees
    return lam[i - 1] - lam[i]


def _word(*slices):
    return tuple(s for s in slices if s.power > 0)


def relation_instances(lam: tuple[int, ...]):
    """All defining-relation instances on one weight space, as
    (name, lhs, rhs) with sides [(coeff, word), ...]."""
    n = len(lam)
    out = []
    E = Slice
    for i in range(1, n):
        for j in range(1, n):
            # commutator of a raise at i with a lower at j
            lhs = [
                (ONE, _word(E("-", j), E("+", i))),
                (-ONE, _word(E("+", i), E("-", j))),
            ]
            rhs = [(qint(_bar_lam(lam, i)), ())] if i == j else []
            out.append((f"schur {i}{j}", lhs, rhs))
        for a, b in ((1, 1), (1, 2), (2, 1)):
            for sign in "+-":
                lhs = [(ONE, _word(E(sign, i, b), E(sign, i, a)))]
                rhs = [(qbinom(a + b, a), _word(E(sign, i, a + b)))]
                out.append((f"divpow1 {sign}{i} {a},{b}", lhs, rhs))
        bl = _bar_lam(lam, i)
        for a, b in product((1, 2, 3), repeat=2):
            lhs = [(ONE, _word(E("-", i, b), E("+", i, a)))]
            rhs = [
                (qbinom(a - b + bl, j), _word(E("+", i, a - j), E("-", i, b - j)))
                for j in range(0, min(a, b) + 1)
            ]
            out.append((f"divpow2 {i} {a},{b}", lhs, rhs))
            lhs = [(ONE, _word(E("+", i, b), E("-", i, a)))]
            rhs = [
                (qbinom(a - b - bl, j), _word(E("-", i, a - j), E("+", i, b - j)))
                for j in range(0, min(a, b) + 1)
            ]
            out.append((f"divpow3 {i} {a},{b}", lhs, rhs))
        pa, pb = lam[i - 1], lam[i]
        if pa == 0 and pb > 0:
            a = pb
            lhs = [(ONE, _word(E("+", i, a), E("-", i, a)))]
            out.append((f"adjust1 {i}", lhs, [(ONE, ())]))
        if pb == 0 and pa > 0:
            a = pa
            lhs = [(ONE, _word(E("-", i, a), E("+", i, a)))]
            out.append((f"adjust1' {i}", lhs, [(ONE, ())]))
        if pb == 3 and pa < 3:
            a = 3 - pa
            lhs = [(ONE, _word(E("+", i, a), E("-", i, a)))]
            out.append((f"adjust2 {i}", lhs, [(ONE, ())]))
        if pa == 3 and pb < 3:
            a = 3 - pb
            lhs = [(ONE, _word(E("-", i, a), E("+", i, a)))]
            out.append((f"adjust2' {i}", lhs, [(ONE, ())]))
    return out


def verify_relations(n: int, d: int, progress=None) -> int:
    """Check every defining relation on every weight space of n columns
    and total weight d.  Returns the number of instances checked."""
    checked = 0
    for lam in weights_bounded(n, d):
        signs = signs_of_weight(lam)
        vecs = _basis_vectors(signs)
        if not vecs:
            continue
        for name, lhs, rhs in relation_instances(lam):
            for _J, vec in vecs.items():
                _, a = combo_action(lhs, lam, vec)
                _, b = combo_action(rhs, lam, vec)
                assert a == b, f"relation {name} fails on {lam}"
            checked += 1
        if progress:
            progress(lam, checked)
    return checked


# ---------------------------------------------------------------------------
# divided powers two ways
# ---------------------------------------------------------------------------


def divided_power_consistent(signs: str, i: int, sign: str, a: int) -> bool:
    """A power-a rung equals the a-fold single rung divided by [a]!,
    checked on every basis web of the boundary (division must be exact)."""
    from .qlaurent import qfact

    lam = weight_of_signs(signs)
    fact = qfact(a)
    for _J, vec in _basis_vectors(signs).items():
        direct = _act((Slice(sign, i, a),), lam, vec)
        repeated = _act((Slice(sign, i),) * a, lam, vec)
        if direct is None or repeated is None:
            if direct is not None or repeated is not None:
                return False
            continue
        dl, dv = direct
        rl, rv = repeated
        assert dl == rl
        scaled = {cfg: poly.exact_div(fact) for cfg, poly in rv.items()}
        scaled = {c: p for c, p in scaled.items() if not p.is_zero()}
        if scaled != {c: p for c, p in dv.items() if not p.is_zero()}:
            return False
    return True


# ---------------------------------------------------------------------------
# the bilinear-form antiautomorphism
# ---------------------------------------------------------------------------


def tau_word(word: Word, source: tuple[int, ...]):
    """Antiautomorphism sending a word on the source weight to a scalar
    times the reversed opposite-sign word.  Power-1 tokens only."""
    scalar = ONE
    lam = source
    rev: list[Slice] = []
    for s in word:
        if s.power != 1:
            raise ValueError("tau is only implemented for power-1 tokens")
        nlam = step_weight(lam, s)
        if nlam is None:
            raise ValueError("word is zero on this weight")
        bl = _bar_lam(lam, s.index)
        if s.sign == "+":
            scalar = scalar.shift(-1 - bl)
        else:
            # the target weight carries the exponent here
            scalar = scalar.shift(1 + _bar_lam(nlam, s.index))
        rev.append(s.reflected())
        lam = nlam
    return scalar, tuple(reversed(rev))


def adjunction_holds(signs: str, word: Word) -> bool:
    """Kuperberg-form adjointness of a word and its tau image, tested on
    all pairs of basis webs of the two boundaries involved."""
    space = web_space(signs)
    lam = weight_of_signs(signs)
    target = word_target(lam, word)
    if target is None:
        return True  # the map is zero and so is its partner
    tsigns = signs_of_weight(target)
    tspace = web_space(tsigns)
    scalar, back = tau_word(word, lam)
    for u in space.basis.values():
        xu = phi_word(word, u)
        for v in tspace.basis.values():
            lhs = kuperberg_form(xu, v) if xu is not None else LaurentPoly.zero()
            tv = phi_word(back, v)
            rhs = (
                scalar * kuperberg_form(u, tv)
                if tv is not None
                else LaurentPoly.zero()
            )
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# inverse growth: a web as a word on a standard closed weight
# ---------------------------------------------------------------------------


def standard_weight(n: int, total: int) -> tuple[int, ...]:
    assert total % 3 == 0 and total <= 3 * n
    k = total // 3
    return (3,) * k + (0,) * (n - k)


def inverse_growth(web: LadderWeb) -> tuple[Word, tuple[int, ...]]:
    """Word moving the standard closed weight to the web's own bottom and
    then climbing its rungs; applying it to the empty web on the standard
    weight reproduces the web's invariant vector."""
    bot = web.bottom_weight
    assert all(v in (0, 3) for v in bot), "inverse growth needs a closed bottom"
    n = len(bot)
    lam0 = standard_weight(n, sum(bot))
    targets = [i for i, v in enumerate(bot) if v == 3]
    k = len(targets)
    word: list[Slice] = []
    # walk the packed columns right to left so moves never collide
    for j in range(k - 1, -1, -1):
        for c in range(j, targets[j]):
            word.append(Slice("-", c + 1, 3))
    word.extend(web.slices)
    return tuple(word), lam0


def format_word(word: Word, lam0: tuple[int, ...]) -> str:
    """Display form, rightmost token acting first."""
    lam = lam0
    parts = [f"1_{lam0}".replace(" ", "")]
    for s in word:
        lam = step_weight(lam, s)
        assert lam is not None
        sub = f"{s.sign}{s.index}" if s.sign == "-" else f"+{s.index}"
        tok = f"E_{{{sub}}}"
        if s.power > 1:
            tok += f"^({s.power})"
        parts.append(tok)
    parts.append(f"1_{lam}".replace(" ", ""))
    return " ".join(reversed(parts))
