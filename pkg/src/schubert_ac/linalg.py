"""Exact linear algebra over Q (Fraction entries) for graded normal forms."""
from __future__ import annotations

from fractions import Fraction


class ExactSolver:
    """Row-reduce a matrix once, then solve A x = b repeatedly.

    Columns are given as sparse {row: int} dicts.  Free variables are set to
    zero when solving, so coefficients on columns that are independent of
    everything to their left are uniquely determined.
    """

    def __init__(self, columns: list[dict[int, int]], nrows: int):
        self.ncols = len(columns)
        self.nrows = nrows
        rows = [[Fraction(0)] * self.ncols for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, val in col.items():
                rows[i][j] = Fraction(val)
        # eliminate with an augmented identity to remember the row transform
        aug = [[Fraction(1) if i == k else Fraction(0) for k in range(nrows)]
               for i in range(nrows)]
        pivots: list[tuple[int, int]] = []  # (row, col)
        r = 0
        for j in range(self.ncols):
            piv = None
            for i in range(r, nrows):
                if rows[i][j]:
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            aug[r], aug[piv] = aug[piv], aug[r]
            inv = 1 / rows[r][j]
            rows[r] = [v * inv for v in rows[r]]
            aug[r] = [v * inv for v in aug[r]]
            for i in range(nrows):
                if i != r and rows[i][j]:
                    factor = rows[i][j]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
                    aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
            pivots.append((r, j))
            r += 1
        self.rows = rows
        self.aug = aug
        self.pivots = pivots
        self.rank = r

    def solve(self, b: dict[int, int]) -> list[Fraction] | None:
        """One solution of A x = b with free variables zero, or None."""
        tb = [Fraction(0)] * self.nrows
        for i in range(self.nrows):
            row = self.aug[i]
            acc = Fraction(0)
            for k, val in b.items():
                if row[k]:
                    acc += row[k] * val
            tb[i] = acc
        # consistency: rows beyond the rank must have zero transformed rhs
        for i in range(self.rank, self.nrows):
            if tb[i]:
                return None
        # the matrix is in reduced echelon form and free variables are zero
        x = [Fraction(0)] * self.ncols
        for (r, j) in self.pivots:
            x[j] = tb[r]
        return x


def rank_of(columns: list[dict[int, int]], nrows: int) -> int:
    return ExactSolver(columns, nrows).rank
