from fractions import Fraction

from ...base_module import EXC, ErrorCode


def _check(n: int, m: int) -> None:
    if n < 3 or n % 2 == 0 or not 0 <= m <= (n - 1) // 2:
        raise EXC(ErrorCode.ValidationError, details={'n': n, 'm': m})


def dihedral_det_closed_form(n: int, m: int) -> Fraction:
    """det K на отражениях и m парах классов вращений группы D_2n (n нечётно).

    Через дополнение Шура: det D = n^n (2m+1), а блок вращений
    A' = c Θ + n Ī с c = (2m(2m+1) - 1)/(2m+1) имеет
    det A' = (-1)^m n^(2m-1) (n + 2m c).
    """
    _check(n, m)
    det_d = Fraction(n ** n * (2 * m + 1))
    if m == 0:
        return det_d
    c = Fraction(2 * m * (2 * m + 1) - 1, 2 * m + 1)
    det_a = (-1) ** m * Fraction(n) ** (2 * m - 1) * (n + 2 * m * c)
    return det_d * det_a


def dihedral_det_printed(n: int, m: int) -> Fraction:
    """Запись через a = (2m+1)n/(2m(2m+1)-1): n^n(2m+1)(n^n/a^n)(a-1)^(2m-1)(a+2m-1)(-1)^m.

    Расходится с прямым вычислением (например, -840 против -1539 при n=3, m=1);
    сохранено только для сравнения в отчётах.
    """
    _check(n, m)
    if m == 0:
        return Fraction(n ** n)
    a = Fraction((2 * m + 1) * n, 2 * m * (2 * m + 1) - 1)
    return (
        Fraction(n ** n * (2 * m + 1))
        * Fraction(n ** n) / a ** n
        * (a - 1) ** (2 * m - 1)
        * (a + 2 * m - 1)
        * (-1) ** m
    )
