from pathlib import Path

import numpy as np

from ...base_module import ClassesLoggerAdapter, EXC, ErrorCode
from .group import Group, GroupKind
from .realization import PermRealization

_logger = ClassesLoggerAdapter.create('perm_file')


def parse_perm_generators(text: str, source: str = '<text>') -> tuple[int, np.ndarray]:
    """Разбор файла образующих: `degree n`, затем строки образов 1..n."""
    lines = [
        (no, line.strip()) for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.strip().startswith('#')
    ]
    if not lines:
        raise EXC(ErrorCode.ParseError, details={'file': source, 'reason': 'empty'})

    no, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != 'degree' or not parts[1].isdigit():
        raise EXC(
            ErrorCode.ParseError,
            details={'file': source, 'line': no, 'reason': 'expected `degree n`'}
        )
    n = int(parts[1])
    if not 1 <= n <= 255:
        raise EXC(ErrorCode.ValidationError, details={'file': source, 'degree': n})

    gens = []
    for no, line in lines[1:]:
        try:
            images = [int(x) for x in line.split()]
        except ValueError:
            raise EXC(
                ErrorCode.ParseError,
                details={'file': source, 'line': no, 'reason': 'not integers'}
            )
        if len(images) != n:
            raise EXC(
                ErrorCode.DimensionMismatch,
                details={'file': source, 'line': no,
                         'degree': n, 'found': len(images)}
            )
        if sorted(images) != list(range(1, n + 1)):
            raise EXC(
                ErrorCode.ParseError,
                details={'file': source, 'line': no, 'reason': 'not a permutation'}
            )
        gens.append([x - 1 for x in images])

    if not gens:
        gens.append(list(range(n)))
    return n, np.asarray(gens, dtype=np.uint8)


def ingest_perm_generators(path: Path | str, max_order: int = 5_000_000) -> Group:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise EXC(ErrorCode.IOError, details={'file': str(path), 'reason': str(e)})

    degree, gens = parse_perm_generators(text, str(path))
    _logger.info(
        'Образующие прочитаны',
        extra={'file': str(path), 'degree': degree, 'generators': len(gens)}
    )
    kind = GroupKind(family='perm', param=str(path), spec=f'perm:{path}')
    return Group(kind, PermRealization(degree), gens, max_order=max_order)
