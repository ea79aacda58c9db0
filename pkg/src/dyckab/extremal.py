"""Extremal paths for a fixed area + bounce total.

Within one level (all paths sharing s = area + bounce) the bounce-minimal
paths are those of least bounce and the area-minimal those of least area.
The flip map restricts to a bijection between the two sets.  Walking one
trade at a time (down: area + 1 / bounce - 1, up: the reverse) through
path classes realizes every intermediate split of s, which settles which
(area, bounce) pairs are populated.

Minimal sets here are the brute-force minimizers over an exhaustive level
decomposition; the shape conditions the theory attaches to them are kept
as separate predicates (the area-side conditions are necessary but not
sufficient) and compared in the verification suite.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .paths import DyckPath, enumerate_paths
from .ops import BOTTOM, add_column_cell, down, up
from .bijection import phi, phi_inverse
from .qbell import ab_interval_width, minimizing_composition


@lru_cache(maxsize=None)
def level_sets(n: int) -> dict:
    """(area, bounce) -> paths, in word order.  Treat as read-only."""
    out = {}
    for p in enumerate_paths(n):
        out.setdefault((p.area(), p.bounce()), []).append(p)
    return out


@lru_cache(maxsize=None)
def ab_level_map(n: int) -> dict:
    """s -> sorted list of realized (area, bounce) with area + bounce = s."""
    out = {}
    for key in level_sets(n):
        out.setdefault(sum(key), []).append(key)
    for keys in out.values():
        keys.sort()
    return out


@lru_cache(maxsize=None)
def _class_index(n: int) -> dict:
    """(area, bounce composition) -> class members in word order."""
    out = {}
    for p in enumerate_paths(n):
        out.setdefault((p.area(), p.bounce_composition()), []).append(p)
    return out


def min_ab(n: int) -> int:
    return math.comb(n, 2) - ab_interval_width(n)


def max_ab(n: int) -> int:
    return math.comb(n, 2)


# -- minimal sets ------------------------------------------------------------


def bounce_minimal(n: int) -> list:
    """Paths of least bounce within their level, in word order."""
    best = {}
    for (a, b) in level_sets(n):
        s = a + b
        if s not in best or b < best[s]:
            best[s] = b
    out = []
    for (a, b), paths in level_sets(n).items():
        if b == best[a + b]:
            out.extend(paths)
    out.sort()
    return out


def area_minimal(n: int) -> list:
    """Paths of least area within their level, in word order."""
    best = {}
    for (a, b) in level_sets(n):
        s = a + b
        if s not in best or a < best[s]:
            best[s] = a
    out = []
    for (a, b), paths in level_sets(n).items():
        if a == best[a + b]:
            out.extend(paths)
    out.sort()
    return out


def is_bounce_minimal(path) -> bool:
    s = path.ab()
    b = path.bounce()
    return all(bb >= b for (aa, bb) in ab_level_map(path.n).get(s, ()))


def is_area_minimal(path) -> bool:
    s = path.ab()
    a = path.area()
    return all(aa >= a for (aa, bb) in ab_level_map(path.n).get(s, ()))


def satisfies_bounce_minimal_conditions(path) -> bool:
    """Strict-partition bounce composition, floating cells at most one
    below the smallest consecutive-part gap."""
    alpha = path.bounce_composition()
    if any(alpha[i] <= alpha[i + 1] for i in range(len(alpha) - 1)):
        return False
    if len(alpha) >= 2:
        slack = min(alpha[i] - alpha[i + 1] - 1 for i in range(len(alpha) - 1))
        if path.area() > path.bounce_path().area() + slack:
            return False
    return True


def satisfies_area_minimal_conditions(path) -> bool:
    """No floating cells, gapless steps ending in a part 1, and no strictly
    increasing triple of parts.  Necessary for area-minimality, not
    sufficient."""
    alpha = path.bounce_composition()
    if not path.is_minimal():
        return False
    if alpha[-1] != 1:
        return False
    if any(abs(alpha[i] - alpha[i + 1]) > 1 for i in range(len(alpha) - 1)):
        return False
    ln = len(alpha)
    for i in range(ln):
        for j in range(i + 1, ln):
            if alpha[i] < alpha[j]:
                if any(alpha[k] > alpha[j] for k in range(j + 1, ln)):
                    return False
    return True


def phi_on_minimal(n: int) -> list:
    """The flip pairing of bounce-minimal against area-minimal paths."""
    return [(p, phi(p)) for p in bounce_minimal(n)]


# -- constructing a representative at (a, b) ---------------------------------


def _first_class_step(path, operator):
    """First class member (word order) and bounce index admitting the
    operator; None when the whole class refuses."""
    members = _class_index(path.n)[(path.area(), path.bounce_composition())]
    for member in members:
        m = len(member.bounce_points()) - 1
        for j in range(1, m + 1):
            result = operator(member, j)
            if result is not BOTTOM:
                return result
    return None


_witness_cache: dict = {}


def construct_path(n: int, a: int, b: int):
    """A member of P_n(a, b), or None when the level is empty.

    Starting points are the first area-minimal path of the level and its
    flip preimage (a bounce-minimal path); one walks up in area by down
    moves for a < b, the other up in bounce by up moves for a >= b,
    trading a single unit per step through path classes.
    """
    if a < 0 or b < 0:
        return None
    s = a + b
    levels = ab_level_map(n)
    if s not in levels:
        return None
    keys = levels[s]
    amin = min(k[0] for k in keys)
    bmin = min(k[1] for k in keys)
    if not (amin <= a <= s - bmin):
        return None
    cache = _witness_cache.setdefault(n, {})
    if (a, b) in cache:
        return cache[(a, b)]
    area_start = level_sets(n)[(amin, s - amin)][0]
    if a < b:
        cur = area_start
        cache[(cur.area(), cur.bounce())] = cur
        while cur.area() < a:
            cur = _first_class_step(cur, down)
            if cur is None:
                return None
            cache[(cur.area(), cur.bounce())] = cur
    else:
        cur = phi_inverse(area_start)
        cache[(cur.area(), cur.bounce())] = cur
        while cur.bounce() < b:
            cur = _first_class_step(cur, up)
            if cur is None:
                return None
            cache[(cur.area(), cur.bounce())] = cur
    return cur if (cur.area(), cur.bounce()) == (a, b) else None


# -- reports -------------------------------------------------------------------


def nonemptiness_symmetry(n: int) -> dict:
    """Check that (a, b) is realized exactly when (b, a) is."""
    realized = set(level_sets(n))
    failures = [key for key in realized if (key[1], key[0]) not in realized]
    return {
        "n": n,
        "symmetric": not failures,
        "levels": len(realized),
        "failures": failures,
    }


def interpolation_report(n: int) -> dict:
    """For every bounce-minimal path with stats (a, b), the whole segment
    (a - i, b + i), 0 <= i <= a - b, is realized."""
    realized = set(level_sets(n))
    failures = []
    for p in bounce_minimal(n):
        a, b = p.area(), p.bounce()
        for i in range(0, a - b + 1):
            if (a - i, b + i) not in realized:
                failures.append({"word": p.word, "a": a - i, "b": b + i})
    return {"n": n, "holds": not failures, "failures": failures}


def bounce_interval_conjecture(n: int) -> dict:
    """Empirical check only, not a theorem: within each level the realized
    bounce values fill [b_min, s - b_min] with no holes."""
    failures = []
    for s, keys in ab_level_map(n).items():
        bmin = min(b for (_, b) in keys)
        have = {b for (_, b) in keys}
        want = set(range(bmin, s - bmin + 1))
        if have != want:
            failures.append({"s": s, "missing": sorted(want - have)})
    return {"n": n, "holds": not failures, "failures": failures}


def top_levels(n: int) -> dict:
    """Structure of the two largest levels: the top one holds one path per
    split of C(n, 2); every realized split one below is unique."""
    s = math.comb(n, 2)
    lv = level_sets(n)
    top_keys = ab_level_map(n).get(s, [])
    second_keys = ab_level_map(n).get(s - 1, [])
    top_expected = [(s - i, i) for i in range(s + 1)]
    return {
        "n": n,
        "max_ab": s,
        "min_ab": min_ab(n),
        "observed_min_ab": min(ab_level_map(n)) if ab_level_map(n) else None,
        "top_count": sum(len(lv[k]) for k in top_keys),
        "top_expected": s + 1,
        "top_full_split": sorted(top_keys) == sorted(top_expected),
        "top_singletons": all(len(lv[k]) == 1 for k in top_keys),
        "second_count": sum(len(lv[k]) for k in second_keys),
        "second_singletons": all(len(lv[k]) == 1 for k in second_keys),
    }


def ab_ladder(n: int, x: int) -> DyckPath:
    """A path with area + bounce exactly x.

    Starts at the block path minimizing area + bounce and repeatedly adds
    a cell to the rightmost column that accepts one; each addition raises
    the total by one or leaves it unchanged, so every value in
    [min_ab(n), C(n, 2)] is hit."""
    lo, hi = min_ab(n), max_ab(n)
    if not lo <= x <= hi:
        raise ValueError(f"no path of semilength {n} has area+bounce {x}")
    cur = DyckPath.from_composition(n, minimizing_composition(n))
    while cur.ab() < x:
        heights = cur.column_heights()
        col = None
        for c in range(n - 1, 0, -1):
            if heights[c - 1] + 1 <= heights[c]:
                col = c
                break
        if col is None:
            raise AssertionError("ladder stuck below target")
        cur = add_column_cell(cur, col)
        assert cur is not BOTTOM
    return cur
