import enum
import json
import sys
import typing as t
from pathlib import Path

from ..base_module import ClassesLoggerAdapter, EXC, ErrorCode, Model
from ..models import (
    CountReport,
    GroupInfo,
    KillingMatrix,
    KillingReport,
    Verdict,
)
from ..models.killing import ComponentReport

_logger = ClassesLoggerAdapter.create('export')


class OutputFormat(enum.Enum):
    """Форматы вывода отчётов"""
    JSON = ('json', ['json'])
    CSV = ('csv', ['csv'])
    DOT = ('dot', ['dot', 'graphviz'])
    TEXT = ('text', ['text', 'txt'])

    def __init__(self, tag: str, aliases: list[str]):
        self.tag = tag
        self.aliases = aliases

    def __str__(self):
        return self.tag

    @classmethod
    def from_string(cls, tag: str) -> 'OutputFormat':
        for fmt in cls:
            if tag in fmt.aliases:
                return fmt
        raise ValueError(f"Неподдерживаемый формат: '{tag}'")


def _dump(result) -> t.Any:
    if isinstance(result, Model):
        return result.dump()
    if isinstance(result, (list, tuple)):
        return [_dump(item) for item in result]
    return result


# --- текстовые сводки ---
def _text_verdict(v: Verdict) -> list[str]:
    lines = [f'{v.theorem} {v.params} -> {v.status.value}']
    for row in v.evidence:
        mark = 'ok ' if row.ok else 'BAD'
        lines.append(f'  [{mark}] {row.claim}: expected {row.expected}, observed {row.observed}')
    lines.extend(f'  note: {n}' for n in v.notes)
    return lines


def _text_info(info: GroupInfo) -> list[str]:
    lines = [f'{info.spec}: order {info.order}, centre {info.center_order}, '
             f'{len(info.classes)} classes',
             '  id  order  size  centralizer  real  rep']
    for c in info.classes:
        lines.append(
            f'  {c.id:>2}  {c.elt_order:>5}  {c.size:>4}  {c.centralizer_order:>11}  '
            f'{"yes" if c.real else "no ":>4}  {c.rep}'
        )
    return lines


def _text_components(r: ComponentReport) -> list[str]:
    line = f'components: {r.component_count}, sizes: {r.component_sizes}'
    if r.equals_commuting_graph is not None:
        line += f', equals commuting graph: {r.equals_commuting_graph}'
    return [line]


def _text_killing(r: KillingReport) -> list[str]:
    lines = [f'{r.spec} class {r.selector} -> ids {r.class_ids}, |C| = {r.set_size}',
             'support: ' + ', '.join(f'{k}:{v}' for k, v in r.support.items())]
    lines += _text_components(r.graph)
    if r.degenerate is not None:
        lines.append(f'degenerate: {r.degenerate}, det: {r.det} ({r.method})')
    lines.extend(f'note: {n}' for n in r.notes)
    return lines


def _text(result) -> str:
    if isinstance(result, (list, tuple)):
        return '\n'.join(_text(item).rstrip('\n') for item in result) + '\n'
    match result:
        case Verdict():
            lines = _text_verdict(result)
        case GroupInfo():
            lines = _text_info(result)
        case KillingReport():
            lines = _text_killing(result)
        case ComponentReport():
            lines = _text_components(result)
        case CountReport():
            lines = [f'{result.spec}: #(x in C{result.c1}, y in C{result.c2}, '
                     f'xy in C{result.c3}) = {result.count}']
        case str():
            lines = [result.rstrip('\n')]
        case _:
            lines = [str(result)]
    return '\n'.join(lines) + '\n'


def render_report(
        result, fmt: OutputFormat, group: str = '', selector: str = ''
) -> str:
    match fmt:
        case OutputFormat.JSON:
            return json.dumps(
                _dump(result), indent=2, ensure_ascii=False, default=str
            ) + '\n'
        case OutputFormat.CSV:
            if not isinstance(result, KillingMatrix):
                raise EXC(ErrorCode.UsageError, details={'reason': 'csv needs a matrix'})
            return result.to_csv(group, selector)
        case OutputFormat.DOT:
            if not isinstance(result, str):
                raise EXC(ErrorCode.UsageError, details={'reason': 'dot needs a graph'})
            return result
    return _text(result)


def emit_report(
        result,
        fmt: OutputFormat,
        output: Path | str | None = None,
        group: str = '',
        selector: str = '',
) -> str:
    """Пишет отчёт в файл или в stdout; возвращает записанный текст"""
    text = render_report(result, fmt, group, selector)
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return text
    path = Path(output)
    try:
        path.write_text(text)
    except OSError as e:
        raise EXC(ErrorCode.IOError, details={'file': str(path), 'reason': str(e)})
    _logger.info('Отчёт записан', extra={'file': str(path), 'format': fmt.tag})
    return text
