"""Fraction-free exact linear solving for small Gram systems."""

from __future__ import annotations

from .exact import ExactScalar, LaurentPoly, exact_div_poly

__all__ = ["SingularSystemError", "solve_exact"]


class SingularSystemError(ArithmeticError):
    """The coefficient matrix is singular; carries the offending system."""

    def __init__(self, matrix, rhs):
        self.matrix = matrix
        self.rhs = rhs
        super().__init__(f"singular linear system: matrix={matrix!r} rhs={rhs!r}")


def solve_exact(matrix: list[list[ExactScalar]], rhs: list[ExactScalar]) -> list[ExactScalar]:
    """Solve A x = b exactly over the scalar field.

    Denominators are cleared row by row, then Bareiss one-step elimination
    runs over Laurent polynomials (each division is exact by construction),
    and back-substitution returns field elements.
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix) or len(rhs) != m:
        raise ValueError("solve_exact expects a square system")
    if m == 0:
        return []

    # clear denominators: each augmented row becomes polynomial
    rows: list[list[LaurentPoly]] = []
    for row, b in zip(matrix, rhs):
        entries = list(row) + [b]
        dens = [e.den for e in entries if not e.den.is_one]
        if not dens:
            rows.append([e.num for e in entries])
            continue
        prod = LaurentPoly.one()
        for d in dens:
            prod = prod * d
        rows.append([
            e.num * prod if e.den.is_one else e.num * exact_div_poly(prod, e.den)
            for e in entries
        ])

    # Bareiss elimination with row pivoting
    prev = LaurentPoly.one()
    for p in range(m):
        pivot_row = next((i for i in range(p, m) if not rows[i][p].is_zero), None)
        if pivot_row is None:
            raise SingularSystemError(matrix, rhs)
        if pivot_row != p:
            rows[p], rows[pivot_row] = rows[pivot_row], rows[p]
        for i in range(p + 1, m):
            for j in range(p + 1, m + 1):
                num = rows[p][p] * rows[i][j] - rows[i][p] * rows[p][j]
                rows[i][j] = exact_div_poly(num, prev)
            rows[i][p] = LaurentPoly.zero()
        prev = rows[p][p]

    # back substitution over the field
    xs: list[ExactScalar] = [ExactScalar.zero()] * m
    for i in range(m - 1, -1, -1):
        acc = ExactScalar(rows[i][m])
        for j in range(i + 1, m):
            acc = acc - ExactScalar(rows[i][j]) * xs[j]
        xs[i] = acc / ExactScalar(rows[i][i])
    return xs
