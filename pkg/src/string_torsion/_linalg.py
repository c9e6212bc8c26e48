"""Exact Gaussian elimination over Q and over Z/q (q prime)."""

from fractions import Fraction


class SingularSystem(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    pass


def _eliminate(rows, rhs, inverse, reduce):
    ncols = len(rows[0])
    aug = [[reduce(v) for v in row] + [reduce(b)] for row, b in zip(rows, rhs)]
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        pick = None
        for r in range(pivot_row, len(aug)):
            if aug[r][col] != 0:
                try:
                    inv = inverse(aug[r][col])
                except ValueError:
                    continue
                pick = r
                break
        if pick is None:
            raise SingularSystem(f"no pivot in column {col}")
        aug[pivot_row], aug[pick] = aug[pick], aug[pivot_row]
        prow = [reduce(v * inv) for v in aug[pivot_row]]
        aug[pivot_row] = prow
        for r in range(len(aug)):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [reduce(a - factor * b) for a, b in zip(aug[r], prow)]
        pivots.append(col)
        pivot_row += 1
    for r in range(pivot_row, len(aug)):
        if aug[r][-1] != 0:
            raise InconsistentSystem("system has no solution")
    return [aug[i][-1] for i in range(ncols)]


def solve_rational(rows, rhs):
    """Unique solution of ``rows @ x = rhs`` over Q.

    ``rows`` may have more rows than columns; extra equations must be
    consistent. Raises SingularSystem when the solution is not unique.
    """
    def inverse(v):
        return 1 / Fraction(v)

    return _eliminate(rows, rhs, inverse, Fraction)


def solve_mod(rows, rhs, q):
    """Unique solution of ``rows @ x = rhs`` over Z/q for prime q."""
    def inverse(v):
        return pow(v, -1, q)

    return _eliminate(rows, rhs, inverse, lambda v: v % q)
