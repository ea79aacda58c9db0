"""Dyck paths and their area/bounce statistics.

A Dyck path of semilength n runs from (0,0) to (n,n) in unit north (N) and
east (E) steps, staying weakly above the diagonal y = x.  Rows are indexed
1..n bottom to top, columns 1..n left to right.

Internally a path is stored as its tuple of row starts: row_starts[r-1] is
the number of E steps preceding the r-th N step.  A step word is a valid
Dyck word exactly when the row starts are weakly increasing with
row_starts[r-1] <= r-1.  Sorting paths by row starts coincides with
lexicographic order on words with N < E, which is the documented
enumeration order.
"""

from __future__ import annotations

import math
from typing import Iterator


class DyckPath:
    """Immutable Dyck path of semilength n."""

    __slots__ = ("_x", "_word")

    def __init__(self, row_starts):
        x = tuple(row_starts)
        ok, pos = _row_starts_ok(x)
        if not ok:
            raise ValueError(f"invalid row starts {x!r} at row {pos}")
        self._x = x
        self._word = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_word(cls, word: str) -> "DyckPath":
        """Parse a step word over {N, E}.

        Rejects unbalanced words and words dipping below the diagonal,
        reporting the 1-based position of the first offending step.
        """
        word = word.strip().upper()
        x = []
        easts = 0
        norths = 0
        for pos, c in enumerate(word, 1):
            if c == "N":
                norths += 1
                x.append(easts)
            elif c == "E":
                easts += 1
                if easts > norths:
                    raise ValueError(
                        f"path drops below the diagonal at position {pos}"
                    )
            else:
                raise ValueError(f"illegal step {c!r} at position {pos}")
        if norths != easts:
            raise ValueError(
                f"unbalanced word: {norths} N steps vs {easts} E steps"
            )
        return cls(x)

    @classmethod
    def from_row_starts(cls, x) -> "DyckPath":
        return cls(x)

    @classmethod
    def from_area_sequence(cls, seq) -> "DyckPath":
        """Build the path whose r-th row holds seq[r-1] whole cells."""
        x = tuple((r - 1) - a for r, a in enumerate(seq, 1))
        return cls(x)

    @classmethod
    def from_column_heights(cls, heights) -> "DyckPath":
        h = tuple(heights)
        n = len(h)
        x = []
        c = 0
        for r in range(1, n + 1):
            while c < n and h[c] < r:
                c += 1
            x.append(c)
        path = cls(x)
        if path.column_heights() != h:
            raise ValueError(f"{h!r} is not a weakly increasing height profile")
        return path

    @classmethod
    def from_composition(cls, n: int, alpha) -> "DyckPath":
        """The staircase-of-blocks path N^a1 E^a1 N^a2 E^a2 ...

        Its bounce path is itself; such paths are exactly the paths with
        no floating cells.
        """
        alpha = tuple(alpha)
        if any(a < 1 for a in alpha):
            raise ValueError(f"composition parts must be positive: {alpha!r}")
        if sum(alpha) != n:
            raise ValueError(f"composition {alpha!r} does not sum to {n}")
        x = []
        pos = 0
        for a in alpha:
            x.extend([pos] * a)
            pos += a
        return cls(x)

    # -- basic accessors ----------------------------------------------

    @property
    def n(self) -> int:
        return len(self._x)

    @property
    def row_starts(self) -> tuple:
        return self._x

    @property
    def word(self) -> str:
        w = self._word
        if w is None:
            parts = []
            prev = 0
            for xr in self._x:
                parts.append("E" * (xr - prev))
                parts.append("N")
                prev = xr
            parts.append("E" * (self.n - prev))
            w = "".join(parts)
            self._word = w
        return w

    def __eq__(self, other):
        return isinstance(other, DyckPath) and self._x == other._x

    def __hash__(self):
        return hash(self._x)

    def __lt__(self, other):
        # row-starts order == word order with N < E
        return self._x < other._x

    def __le__(self, other):
        return self._x <= other._x

    def __repr__(self):
        return f"DyckPath({self.word!r})"

    # -- statistics ----------------------------------------------------

    def area_sequence(self) -> tuple:
        """Whole cells between the path and the diagonal, row by row."""
        return tuple((r - 1) - xr for r, xr in enumerate(self._x, 1))

    def area(self) -> int:
        n = self.n
        return (n * (n - 1)) // 2 - sum(self._x)

    def column_heights(self) -> tuple:
        """Cells below the path in each column: h[c-1] for column c."""
        n = self.n
        cnt = [0] * (n + 1)
        for v in self._x:
            cnt[v] += 1
        h = []
        run = 0
        for c in range(1, n + 1):
            run += cnt[c - 1]
            h.append(run)
        return tuple(h)

    def bounce_points(self) -> tuple:
        """Diagonal touch heights (b_0=0, ..., b_m=n) of the bounce path."""
        n = self.n
        h = self.column_heights()
        pts = [0]
        while pts[-1] < n:
            pts.append(h[pts[-1]])
        return tuple(pts)

    def bounce_composition(self) -> tuple:
        pts = self.bounce_points()
        return tuple(pts[i] - pts[i - 1] for i in range(1, len(pts)))

    def bounce(self) -> int:
        n = self.n
        return sum(n - b for b in self.bounce_points()[1:])

    def bounce_path(self) -> "DyckPath":
        return DyckPath.from_composition(self.n, self.bounce_composition())

    def ab(self) -> int:
        """area + bounce."""
        return self.area() + self.bounce()

    def is_minimal(self) -> bool:
        """True when the path equals its own bounce path (no floating cells)."""
        return self._x == self.bounce_path()._x

    def floating_cells(self) -> list:
        """(row, column) of every cell between the path and its bounce path."""
        base = self.bounce_path()._x
        cells = []
        for r in range(1, self.n + 1):
            for c in range(self._x[r - 1] + 1, base[r - 1] + 1):
                cells.append((r, c))
        return cells

    def floating_cell_count(self) -> int:
        base = self.bounce_path()._x
        return sum(b - x for x, b in zip(self._x, base))

    def to_record(self) -> dict:
        """The shared JSON record for this path."""
        return {
            "n": self.n,
            "word": self.word,
            "area": self.area(),
            "bounce": self.bounce(),
            "alpha": list(self.bounce_composition()),
            "bounce_points": list(self.bounce_points()),
            "area_seq": list(self.area_sequence()),
            "floating": self.floating_cell_count(),
        }


def _row_starts_ok(x):
    prev = 0
    for r, xr in enumerate(x, 1):
        if xr < prev or xr > r - 1:
            return False, r
        prev = xr
    return True, None


def is_valid_row_starts(x) -> bool:
    return _row_starts_ok(tuple(x))[0]


# -- enumeration -------------------------------------------------------


def enumerate_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n in word order (N < E), each once."""
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    for x in _iter_row_starts(n):
        p = DyckPath.__new__(DyckPath)
        p._x = x
        p._word = None
        yield p


def _iter_row_starts(n):
    x = []

    def rec():
        r = len(x)
        if r == n:
            yield tuple(x)
            return
        lo = x[-1] if x else 0
        for v in range(lo, r + 1):
            x.append(v)
            yield from rec()
            x.pop()

    yield from rec()


def iter_area_bounce(n: int) -> Iterator[tuple]:
    """(area, bounce) over all paths of semilength n, without path objects.

    Backbone of the exhaustive polynomial builds; the per-path work is a
    single O(n) sweep.
    """
    total = (n * (n - 1)) // 2
    for x in _iter_row_starts(n):
        cnt = [0] * (n + 1)
        for v in x:
            cnt[v] += 1
        h = [0] * (n + 1)
        run = 0
        for c in range(1, n + 1):
            run += cnt[c - 1]
            h[c] = run
        b = 0
        bounce = 0
        while b < n:
            b = h[b + 1]
            bounce += n - b
        yield total - sum(x), bounce


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# -- compositions and partitions ----------------------------------------


def compositions(n: int) -> Iterator[tuple]:
    """All 2^(n-1) compositions of n, parts left to right."""
    if n == 0:
        yield ()
        return

    def rec(m):
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in rec(m - first):
                yield (first,) + rest

    yield from rec(n)


def partitions(n: int) -> Iterator[tuple]:
    """All partitions of n, parts weakly decreasing."""

    def rec(m, mx):
        if m == 0:
            yield ()
            return
        for k in range(min(m, mx), 0, -1):
            for rest in rec(m - k, k):
                yield (k,) + rest

    yield from rec(n, n)


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def conjugate(parts) -> tuple:
    """Transpose of the Young diagram; an involution."""
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, parts[0] + 1))


def distinct_parts(parts) -> tuple:
    """The distinct part sizes, largest first."""
    out = []
    for p in parts:
        if not out or out[-1] != p:
            out.append(p)
    return tuple(out)


def multiplicity(parts, size: int) -> int:
    return sum(1 for p in parts if p == size)


# -- counting and classes -------------------------------------------------


def count_paths_with_bounce_path(n: int, alpha) -> int:
    """Number of paths whose bounce path is the block path of alpha.

    Product over consecutive parts of C(a_{j-1} + a_j - 1, a_j); the
    one-part composition gives the empty product 1.
    """
    alpha = tuple(alpha)
    if sum(alpha) != n or any(a < 1 for a in alpha):
        raise ValueError(f"{alpha!r} is not a composition of {n}")
    out = 1
    for j in range(1, len(alpha)):
        out *= math.comb(alpha[j - 1] + alpha[j] - 1, alpha[j])
    return out


def equivalence_class(path: DyckPath) -> Iterator[DyckPath]:
    """Paths sharing the area and the bounce path of ``path``, in word order.

    Realized as a filter over the full enumeration; fine at desk scale.
    """
    a = path.area()
    alpha = path.bounce_composition()
    for q in enumerate_paths(path.n):
        if q.area() == a and q.bounce_composition() == alpha:
            yield q
