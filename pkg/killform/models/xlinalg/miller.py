from fractions import Fraction

from ...base_module import EXC, ErrorCode, Model
from .exact import ExactMatrix


class MillerResult(Model):
    """Критерий обратимости E + H для обратимой диагональной E и H ранга <= 1."""

    invertible: bool
    trace: Fraction
    det: int


def _rank_at_most_one(H: ExactMatrix) -> bool:
    base = next((row for row in H.rows if any(row)), None)
    if base is None:
        return True
    j0 = next(j for j, v in enumerate(base) if v)
    return all(
        row[j] * base[j0] == base[j] * row[j0]
        for row in H.rows for j in range(H.n)
    )


def miller_invertible(E: ExactMatrix, H: ExactMatrix) -> MillerResult:
    if E.n != H.n:
        raise EXC(ErrorCode.DimensionMismatch, details={'E': E.n, 'H': H.n})
    if not E.is_diagonal():
        raise EXC(
            ErrorCode.ValidationError,
            details={'reason': 'E must be scalar or diagonal'}
        )
    diag = E.diagonal()
    if any(d == 0 for d in diag):
        raise EXC(ErrorCode.NotInvertible, details={'reason': 'E is singular'})
    if not _rank_at_most_one(H):
        raise EXC(ErrorCode.RankTooLarge, details={'reason': 'H has rank > 1'})

    trace = sum((Fraction(H.rows[i][i], d) for i, d in enumerate(diag)), Fraction(0))
    det_e = 1
    for d in diag:
        det_e *= d
    # det(E + H) = det(E) (1 + Tr(H E^-1))
    det = det_e * (1 + trace)
    return MillerResult(
        invertible=trace != -1, trace=trace, det=int(det),
    )
