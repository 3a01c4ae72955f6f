"""Partitions, Young diagram statistics and reverse tableaux.

A partition is a plain tuple of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Boxes are 1-based ``(row, col)``
pairs in English notation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def make_partition(parts):
    """Validate and canonicalize (strip trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weight(lam):
    return sum(lam)


def length(lam):
    return sum(1 for p in lam if p)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def part(lam, i):
    """lam_i with 1-based index, zero past the end."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def boxes(lam):
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


def in_diagram(lam, box):
    i, j = box
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def _check_box(lam, box):
    if not in_diagram(lam, box):
        raise ValueError(f"box {box} is not in the diagram of {lam}")


def arm(lam, box):
    _check_box(lam, box)
    i, j = box
    return lam[i - 1] - j


def leg(lam, box):
    _check_box(lam, box)
    i, j = box
    return sum(1 for k in range(i, len(lam)) if lam[k] >= j)


def arm_colength(lam, box):
    _check_box(lam, box)
    return box[1] - 1


def leg_colength(lam, box):
    _check_box(lam, box)
    return box[0] - 1


def contains(mu, lam):
    """True iff lam is a subdiagram of mu."""
    return all(part(mu, i) >= p for i, p in enumerate(lam, 1))


def rc_set(mu, nu):
    """Boxes of mu in a row meeting mu/nu but in no column meeting mu/nu."""
    if not contains(mu, nu):
        raise ValueError(f"{nu} is not contained in {mu}")
    skew = [b for b in boxes(mu) if not in_diagram(nu, b)]
    rows = {i for i, _ in skew}
    cols = {j for _, j in skew}
    return {(i, j) for (i, j) in boxes(mu) if i in rows and j not in cols}


def hook_product(lam):
    result = 1
    for b in boxes(lam):
        result *= arm(lam, b) + leg(lam, b) + 1
    return result


def y_lambda(lam):
    return Fraction((-4) ** weight(lam), hook_product(lam))


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n, max_length=None):
    """Partitions of 0..n, optionally capped in length."""
    out = []
    for k in range(n + 1):
        for lam in partitions_of(k):
            if max_length is None or len(lam) <= max_length:
                out.append(lam)
    return out


@dataclass(frozen=True)
class ReverseTableau:
    """Filling with weakly decreasing rows and strictly decreasing columns."""

    shape: tuple
    rows: tuple

    def __getitem__(self, box):
        i, j = box
        return self.rows[i - 1][j - 1]

    def entries(self):
        return {b: self[b] for b in boxes(self.shape)}

    def row_major(self):
        return tuple(v for row in self.rows for v in row)

    def sub_shape(self, k):
        """Partition formed by boxes with entry > k."""
        return make_partition(sum(1 for v in row if v > k) for row in self.rows)

    def is_valid(self, r=None):
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v < 1 or (r is not None and v > r):
                    return False
                if j and row[j - 1] < v:
                    return False
                if i and self.rows[i - 1][j] <= v:
                    return False
        return True


def reverse_tableaux(lam, r):
    """All reverse tableaux of shape lam with entries in 1..r.

    Cells are filled in row-major order, each with values ascending, so the
    output is sorted lexicographically by the row-major entry vector.
    """
    lam = make_partition(lam)
    if r < 0:
        raise ValueError("r must be nonnegative")
    cells = boxes(lam)
    grid = {}
    out = []

    def fill(pos):
        if pos == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in range(1, lam[i - 1] + 1))
                         for i in range(1, len(lam) + 1))
            out.append(ReverseTableau(lam, rows))
            return
        i, j = cells[pos]
        hi = r
        if j > 1:
            hi = min(hi, grid[(i, j - 1)])
        if i > 1:
            hi = min(hi, grid[(i - 1, j)] - 1)
        # strictly decreasing columns need room below: entry >= rows remaining in column
        lo = 1 + sum(1 for k in range(i, len(lam)) if lam[k] >= j)
        for v in range(lo, hi + 1):
            grid[(i, j)] = v
            fill(pos + 1)
        grid.pop((i, j), None)

    fill(0)
    return out


def semistandard_tableaux(lam, r):
    """SSYT of shape lam in 1..r as tuples of rows (rows weak, columns strict increasing)."""
    lam = make_partition(lam)
    cells = boxes(lam)
    grid = {}
    out = []

    def fill(pos):
        if pos == len(cells):
            out.append(tuple(tuple(grid[(i, j)] for j in range(1, lam[i - 1] + 1))
                             for i in range(1, len(lam) + 1)))
            return
        i, j = cells[pos]
        lo = 1
        if j > 1:
            lo = max(lo, grid[(i, j - 1)])
        if i > 1:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, r + 1):
            grid[(i, j)] = v
            fill(pos + 1)
        grid.pop((i, j), None)

    fill(0)
    return out


def to_json(lam):
    return list(lam)


def key(lam):
    """Stringified JSON key used in coefficient maps, e.g. "[2,1]"."""
    return "[" + ",".join(str(p) for p in lam) + "]"


def from_key(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"bad partition key {text!r}")
    body = text[1:-1].strip()
    return make_partition(int(t) for t in body.split(",")) if body else ()
