"""Independent combinatorial oracles used to cross-check the web machinery.

Nothing here knows about webs or flows: dimensions come from classical
representation-theoretic counts (a tensor-product random-walk on dominant
weights, semistandard tableau enumeration, the hook content formula), so
agreement with the web-side computations is meaningful.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache


def invariant_dim(signs: str) -> int:
    """Multiplicity of the trivial summand in the tensor product reading
    the sign string left to right ('+' the vector rep, '-' its dual,
    'o' and 'x' trivial for this count)."""
    state: dict[tuple[int, int], int] = {(0, 0): 1}
    for c in signs:
        if c not in "+-":
            continue
        nxt: Counter = Counter()
        for (a, b), m in state.items():
            if c == "+":
                steps = ((a + 1, b), (a - 1, b + 1), (a, b - 1))
            else:
                steps = ((a, b + 1), (a + 1, b - 1), (a - 1, b))
            for x in steps:
                if x[0] >= 0 and x[1] >= 0:
                    nxt[x] += m
        state = dict(nxt)
    return state.get((0, 0), 0)


def ssyt_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the given shape whose entry i
    appears content[i-1] times (entries 1..len(content))."""
    if sum(shape) != sum(content):
        return 0
    rows = len(shape)

    def fits(tab, r, c, v):
        if c > 0 and tab[r][c - 1] > v:
            return False
        if r > 0 and tab[r - 1][c] >= v:
            return False
        return True

    cells = [(r, c) for r in range(rows) for c in range(shape[r])]
    remaining = list(content)

    def rec(i, tab):
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for v in range(1, len(content) + 1):
            if remaining[v - 1] and fits(tab, r, c, v):
                remaining[v - 1] -= 1
                tab[r][c] = v
                total += rec(i + 1, tab)
                tab[r][c] = 0
                remaining[v - 1] += 1
        return total

    return rec(0, [[0] * k for k in shape])


@lru_cache(maxsize=None)
def hook_content_dim(shape: tuple[int, ...], n: int) -> int:
    """Dimension of the gl_n module with the given partition as highest
    weight, by the hook content formula."""
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0] if shape else 0)]
    out = Fraction(1)
    for i, row in enumerate(shape):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            out *= Fraction(n + j - i, hook)
    assert out.denominator == 1
    return int(out)
