"""Column fillings encoding boundary states.

A boundary state string is the same data as a filling of three columns,
one per color in the order (1, 0, -1): visible strand i sits in the
columns of the colors it carries (one column for a single strand, two
for a double).  The filling is balanced, with all three columns of equal
length, exactly when every color is used equally often, which is the
condition for the state string to bound a flow at all.  Columns are
strictly increasing by construction.

The semistandard fillings (rows weakly increasing in column order) pick
out exactly the dominant state strings, the ones indexing basis webs.
"""

from __future__ import annotations

from itertools import combinations, product

from .flows import FULL, colorset_for, colorset_state
from .webs import weight_of_signs
from .growth import construct_flow, GrownWeb

COLOR_ORDER = (1, 0, -1)

# a filling is a triple of strictly increasing index tuples, one per color
Filling = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def hat_weights(signs: str) -> tuple[int, ...]:
    """Multiplicities of the visible strands only."""
    return tuple(v for v in weight_of_signs(signs) if v in (1, 2))


def satisfies_conds(signs: str, states) -> bool:
    """Every color used equally often across the boundary."""
    counts = {c: 0 for c in COLOR_ORDER}
    mus = hat_weights(signs)
    states = tuple(states)
    if len(states) != len(mus):
        raise ValueError("state string length must match visible strands")
    for mu, j in zip(mus, states):
        for c in colorset_for(mu, j):
            counts[c] += 1
    return len(set(counts.values())) == 1


def state_to_filling(signs: str, states) -> Filling:
    cols: dict[int, list[int]] = {c: [] for c in COLOR_ORDER}
    for i, (mu, j) in enumerate(zip(hat_weights(signs), tuple(states)), start=1):
        for c in colorset_for(mu, j):
            cols[c].append(i)
    return tuple(tuple(cols[c]) for c in COLOR_ORDER)


def filling_to_state(signs: str, filling: Filling) -> tuple[int, ...]:
    mus = hat_weights(signs)
    out = []
    for i, mu in enumerate(mus, start=1):
        colors = frozenset(
            c for c, col in zip(COLOR_ORDER, filling) if i in col
        )
        if len(colors) != mu:
            raise ValueError(f"filling gives strand {i} the wrong multiplicity")
        out.append(colorset_state(colors))
    return tuple(out)


def is_balanced(filling: Filling) -> bool:
    return len({len(col) for col in filling}) == 1


def is_semistandard(filling: Filling) -> bool:
    """Balanced with weakly increasing rows in the color order."""
    if not is_balanced(filling):
        return False
    for row in zip(*filling):
        if not (row[0] <= row[1] <= row[2]):
            return False
    return True


def enumerate_fillings(signs: str) -> list[Filling]:
    """All balanced fillings for a boundary, by direct column assembly."""
    mus = hat_weights(signs)
    if sum(mus) % 3:
        return []
    load = sum(mus) // 3
    out: list[Filling] = []
    cols: dict[int, list[int]] = {c: [] for c in COLOR_ORDER}

    def rec(i):
        if i > len(mus):
            if all(len(cols[c]) == load for c in COLOR_ORDER):
                out.append(tuple(tuple(cols[c]) for c in COLOR_ORDER))
            return
        for chosen in combinations(COLOR_ORDER, mus[i - 1]):
            if any(len(cols[c]) >= load for c in chosen):
                continue
            for c in chosen:
                cols[c].append(i)
            rec(i + 1)
            for c in chosen:
                cols[c].pop()

    rec(1)
    return out


def center_dim(signs: str) -> int:
    """Number of balanced fillings of the boundary."""
    return len(enumerate_fillings(signs))


def strip_triple(filling: Filling):
    """Remove the last row; returns (smaller filling, removed triple)."""
    if not is_balanced(filling) or not filling[0]:
        raise ValueError("need a balanced nonempty filling")
    triple = tuple(col[-1] for col in filling)
    return tuple(col[:-1] for col in filling), triple


def insert_triple(filling: Filling, triple) -> Filling:
    """Append one row; entries must extend each column strictly."""
    out = []
    for col, v in zip(filling, triple):
        if col and col[-1] >= v:
            raise ValueError("triple does not extend the columns")
        out.append(col + (v,))
    return tuple(out)


def filling_flow(signs: str, filling: Filling) -> GrownWeb:
    """A web carrying a flow whose boundary realizes the filling."""
    return construct_flow(signs, filling_to_state(signs, filling))
