"""Partial operators on Dyck paths.

Every operator either returns a new DyckPath of the same semilength or the
absorbing element BOTTOM, and maps BOTTOM to BOTTOM.  Row/column indices
outside 1..n are usage errors (ValueError), kept distinct from the semantic
failure BOTTOM.

Cell operators:
  add_area_cell(p, r)      one cell to the left of the path in row r
  remove_area_cell(p, r)   its inverse
  add_column_cell(p, c)    one cell on top of column c
  remove_column_cell(p, c) its inverse

Compound operators (i indexes bounce points):
  shift(p, i)         moves the i-th bounce point down one; area fixed,
                      bounce + 1
  unshift(p, i)       exact inverse of shift
  bounce_boost(p, i, k)  composition of shifts raising bounce by exactly k
  up(p, i)            area - 1, bounce + 1 (region move at bounce corner i)
  down(p, i)          exact inverse of up
"""

from __future__ import annotations

from .paths import DyckPath, is_valid_row_starts


class Bottom:
    """Absorbing failure element; falsy, compares equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "bottom"

    def __bool__(self):
        return False


BOTTOM = Bottom()


def is_bottom(value) -> bool:
    return value is BOTTOM


def _check_index(path, i, what):
    if not isinstance(i, int) or i < 1 or i > path.n:
        raise ValueError(f"{what} {i!r} out of range 1..{path.n}")


def _path_from_x(x):
    p = DyckPath.__new__(DyckPath)
    p._x = tuple(x)
    p._word = None
    return p


# -- single-cell operators ------------------------------------------------


def add_area_cell(path, row):
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, row, "row")
    x = path.row_starts
    xr = x[row - 1] - 1
    if xr < 0 or (row >= 2 and x[row - 2] > xr):
        return BOTTOM
    return _path_from_x(x[: row - 1] + (xr,) + x[row:])


def remove_area_cell(path, row):
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, row, "row")
    x = path.row_starts
    xr = x[row - 1] + 1
    if xr > row - 1 or (row < path.n and x[row] < xr):
        return BOTTOM
    return _path_from_x(x[: row - 1] + (xr,) + x[row:])


def add_column_cell(path, col):
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, col, "column")
    n = path.n
    h = list(path.column_heights())
    if col == n or h[col - 1] + 1 > h[col]:
        return BOTTOM
    h[col - 1] += 1
    return DyckPath.from_column_heights(h)


def remove_column_cell(path, col):
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, col, "column")
    h = list(path.column_heights())
    if h[col - 1] - 1 < col or (col >= 2 and h[col - 2] > h[col - 1] - 1):
        return BOTTOM
    h[col - 1] -= 1
    return DyckPath.from_column_heights(h)


# -- shift family ----------------------------------------------------------


def shift(path, i):
    """Trade the cells of row b_i for cells of column b_i.

    Succeeds only if the path touches its bounce path at (b_{i-1}, b_i - 1)
    and the s = b_{i+1} - h(b_i) cell moves all stay inside the Dyck
    region; then area is unchanged, bounce grows by one, and only the i-th
    bounce point moves (down by one).
    """
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, i, "bounce index")
    b = path.bounce_points()
    m = len(b) - 1
    if i >= m:
        return BOTTOM
    h = path.column_heights()
    if i >= 2 and h[b[i - 1] - 1] == b[i]:
        return BOTTOM
    s = b[i + 1] - h[b[i] - 1]
    if s < 1:
        return BOTTOM
    cur = path
    for _ in range(s):
        cur = remove_area_cell(cur, b[i])
        if cur is BOTTOM:
            return BOTTOM
    for _ in range(s):
        cur = add_column_cell(cur, b[i])
        if cur is BOTTOM:
            return BOTTOM
    return cur


def unshift(path, i):
    """Inverse of shift; BOTTOM when no valid preimage exists.

    The move count is read off as the east run leaving (b_{i-1}, b_i) in
    the given path, and the candidate preimage is verified by applying
    shift forward.
    """
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, i, "bounce index")
    b = path.bounce_points()
    m = len(b) - 1
    if i > m:
        return BOTTOM
    c = b[i]  # preimage's i-th bounce point is c + 1
    if c + 1 > path.n:
        return BOTTOM
    x = path.row_starts
    run_lo = x[c - 1] if c >= 1 else 0
    run_hi = x[c] if c < path.n else path.n
    if not (run_lo <= b[i - 1] <= run_hi):
        return BOTTOM
    s = run_hi - b[i - 1]
    if s < 1:
        return BOTTOM
    col = c + 1
    cur = path
    for _ in range(s):
        cur = remove_column_cell(cur, col)
        if cur is BOTTOM:
            return BOTTOM
    for _ in range(s):
        cur = add_area_cell(cur, col)
        if cur is BOTTOM:
            return BOTTOM
    if shift(cur, i) != path:
        return BOTTOM
    return cur


def bounce_boost(path, i, k):
    """Raise bounce by exactly k via shifts at i, i+1, ...

    Against the bounce composition of the input, the block at i+j absorbs
    up to max(0, alpha_i - alpha_{i+j}) shift applications; the budget k is
    spent greedily left to right and the last block gets the remainder.
    BOTTOM if the budget exceeds the total capacity or any shift fails.
    k = 0 is the identity.
    """
    if path is BOTTOM:
        return BOTTOM
    if k < 0:
        raise ValueError("boost amount must be nonnegative")
    if k == 0:
        return path
    _check_index(path, i, "bounce index")
    alpha = path.bounce_composition()
    length = len(alpha)
    if i > length:
        return BOTTOM
    remaining = k
    plan = []
    j = 1
    while remaining > 0 and i + j <= length:
        full = max(0, alpha[i - 1] - alpha[i + j - 1])
        take = min(full, remaining)
        plan.append((i + j - 1, take))
        remaining -= take
        j += 1
    if remaining > 0:
        return BOTTOM
    cur = path
    for idx, e in plan:
        for _ in range(e):
            cur = shift(cur, idx)
            if cur is BOTTOM:
                return BOTTOM
    return cur


# -- up/down family ---------------------------------------------------------


def up(path, i):
    """Move the block above bounce corner i; area - 1, bounce + 1.

    Cuts columns b_{i-1}+1 .. b_{i-1}+u+1 down to height b_i - 1 (u is the
    gap between column b_i and the next bounce point) and re-adds the cut
    material, rotated, against column b_i in the rows just below b_{i+1}.
    The whole move is atomic: only the final state is validated.
    """
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, i, "bounce index")
    n = path.n
    b = path.bounce_points()
    m = len(b) - 1
    if i > m:
        return BOTTOM
    h = path.column_heights()
    if i >= 2 and h[b[i - 1] - 1] == b[i]:
        return BOTTOM
    u = 0 if i == m else b[i + 1] - h[b[i] - 1]
    cut = b[i - 1] + u + 1
    if cut > n:
        return BOTTOM
    beta = [h[b[i - 1] + u + 2 - j - 1] - b[i] + 1 for j in range(1, u + 1)]
    x = list(path.row_starts)
    for r in range(b[i], h[cut - 1] + 1):
        if x[r - 1] < cut:
            x[r - 1] = cut
    for j in range(1, u + 1):
        x[b[i + 1] - u + j - 1] -= beta[j - 1]
    if not is_valid_row_starts(x):
        return BOTTOM
    return _path_from_x(x)


def down(path, i):
    """Inverse of up; BOTTOM when no valid preimage exists.

    Rebuilds the unique candidate preimage (un-extend the rows below
    b_{i+1}, restore the cut columns at the corner) and verifies it by
    applying up forward, so up/down are mutually inverse by construction.
    """
    if path is BOTTOM:
        return BOTTOM
    _check_index(path, i, "bounce index")
    n = path.n
    b = path.bounce_points()
    m = len(b) - 1
    if i >= m:
        return BOTTOM
    c = b[i]
    x = path.row_starts
    u = x[c] - b[i - 1] - 1
    if u < 0:
        return BOTTOM
    xp = list(x)
    beta = []
    for j in range(1, u + 1):
        r = b[i + 1] - u + j
        if r < 1 or r > n:
            return BOTTOM
        amount = (c + 1) - x[r - 1]
        if amount < 1:
            return BOTTOM
        beta.append(amount)
        xp[r - 1] = c + 1
    top = c + (beta[0] if beta else 0)
    if top > n:
        return BOTTOM
    xp[c] = b[i - 1]
    for r in range(c + 2, top + 1):
        t = r - (c + 1)
        xp[r - 1] = b[i - 1] + 1 + sum(1 for v in beta if v <= t)
    if not is_valid_row_starts(xp):
        return BOTTOM
    candidate = _path_from_x(xp)
    if up(candidate, i) != path:
        return BOTTOM
    return candidate


# -- existence scans ---------------------------------------------------------


def existence_scan_down(path, i):
    """Index j >= i with down(path, j) != BOTTOM, under the hypothesis
    that row b_i + 1 holds exactly b_i - b_{i-1} - 1 cells.

    Returns None when the hypothesis fails.  Forward scan: accept the
    first j with h(b_j + 2) == b_{j+1}, falling back to m - 1.
    """
    if path is BOTTOM:
        return None
    _check_index(path, i, "bounce index")
    b = path.bounce_points()
    m = len(b) - 1
    if i > m - 1:
        return None
    a = path.area_sequence()
    if b[i] + 1 > path.n or a[b[i]] != b[i] - b[i - 1] - 1:
        return None
    h = path.column_heights()
    for j in range(i, m - 1):
        if h[b[j] + 2 - 1] == b[j + 1]:
            return j
    return m - 1


def existence_scan_up(path, i):
    """Index j <= i with up(path, j) != BOTTOM, under the hypothesis that
    column b_i is filled to height b_{i+1}.

    Returns None when the hypothesis fails.  Backward scan: accept the
    first j whose corner touches, falling back to 1.
    """
    if path is BOTTOM:
        return None
    _check_index(path, i, "bounce index")
    b = path.bounce_points()
    m = len(b) - 1
    if i > m - 1:
        return None
    h = path.column_heights()
    if h[b[i] - 1] != b[i + 1]:
        return None
    for j in range(i, 0, -1):
        if j == 1 or h[b[j - 1] - 1] < b[j]:
            return j
    return 1
