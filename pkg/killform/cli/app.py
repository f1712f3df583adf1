import argparse
import asyncio
import json
import sys

from pydantic import ValidationError

from ..base_module import ClassesLoggerAdapter, EXC, ErrorCode, configure_logging
from ..injectors import GroupRegistryInj
from ..models import Theorem, VerdictStatus
from ..services import (
    HarnessService,
    KillingService,
    OutputFormat,
    TracingService,
    emit_report,
)
from .config import Command, RunConfig

_logger = ClassesLoggerAdapter.create('cli')

_VERIFY_PARAMS = ('q', 'family', 'n', 'p', 'spec', 'gens')


def _common(parser: argparse.ArgumentParser) -> None:
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument('--json', dest='format', action='store_const', const='json')
    fmt.add_argument('--text', dest='format', action='store_const', const='text')
    parser.add_argument('--output', type=str, help='файл для отчёта вместо stdout')
    parser.add_argument('--max-order', type=int, default=5_000_000)
    parser.add_argument('--max-class', type=int)
    parser.add_argument('--threads', type=int)
    parser.add_argument('--log-level', default='WARNING')


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='killform',
        description='Формы Киллинга на G-устойчивых множествах конечных групп.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('info', help='порядок группы и таблица классов')
    p.add_argument('spec')
    _common(p)

    p = sub.add_parser('killing', help='форма Киллинга на классе')
    p.add_argument('spec')
    p.add_argument('--class', dest='selector', required=True)
    p.add_argument('--csv', help='записать матрицу K в CSV')
    _common(p)

    p = sub.add_parser('graph', help='компоненты графа Киллинга')
    p.add_argument('spec')
    p.add_argument('--class', dest='selector', required=True)
    p.add_argument('--dot', help='записать граф в DOT')
    _common(p)

    p = sub.add_parser('count', help='число решений xy = z по классам')
    p.add_argument('spec')
    p.add_argument('--triple', required=True)
    _common(p)

    p = sub.add_parser('verify', help='процедура проверки по тегу или all')
    p.add_argument('theorem', help=f"all или одно из {Theorem.get_all_aliases()}")
    p.add_argument('--q', type=int)
    p.add_argument('--family')
    p.add_argument('--n', type=int)
    p.add_argument('--p', type=int)
    p.add_argument('--spec')
    p.add_argument('--gens')
    _common(p)

    p = sub.add_parser('scan', help='невырожденность на всех вещественных классах')
    p.add_argument('spec')
    _common(p)
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    fmt = args.format or ('text' if sys.stdout.isatty() else 'json')
    data = {
        'command': command,
        'spec': getattr(args, 'spec', None) if command is not Command.VERIFY else None,
        'selector': getattr(args, 'selector', None),
        'format': OutputFormat.from_string(fmt),
        'output': args.output,
        'csv': getattr(args, 'csv', None),
        'dot': getattr(args, 'dot', None),
        'triple': getattr(args, 'triple', None),
        'max_order': args.max_order,
        'max_class': args.max_class,
        'threads': args.threads,
        'log_level': args.log_level,
    }
    if command is Command.VERIFY:
        data['theorem'] = args.theorem
        data['params'] = {
            k: getattr(args, k) for k in _VERIFY_PARAMS
            if getattr(args, k) is not None
        }
    try:
        return RunConfig(**data)
    except ValidationError as e:
        raise EXC(
            ErrorCode.UsageError,
            details={'errors': [error['msg'] for error in e.errors()]}
        )


async def _dispatch(cfg: RunConfig) -> int:
    registry = GroupRegistryInj(cfg.killform_config())
    await registry.setup()
    killing = KillingService(registry)
    harness = HarnessService(registry, concurrency=registry.config.parallel.threads)
    try:
        match cfg.command:
            case Command.INFO:
                emit_report(await killing.info(cfg.spec), cfg.format, cfg.output)
                return 0
            case Command.KILLING:
                report, K = await killing.killing(
                    cfg.spec, cfg.selector, with_matrix=cfg.csv is not None
                )
                if cfg.csv is not None:
                    emit_report(K, OutputFormat.CSV, cfg.csv,
                                group=report.spec, selector=report.selector)
                emit_report(report, cfg.format, cfg.output)
                return 0
            case Command.GRAPH:
                report, dot = await killing.graph(cfg.spec, cfg.selector)
                if cfg.dot is not None:
                    emit_report(dot, OutputFormat.DOT, cfg.dot)
                emit_report(report, cfg.format, cfg.output)
                return 0
            case Command.COUNT:
                emit_report(await killing.count(cfg.spec, cfg.triple),
                            cfg.format, cfg.output)
                return 0
            case Command.SCAN:
                verdict = await harness.verify(Theorem.CONJECTURE_SCAN, spec=cfg.spec)
                emit_report(verdict, cfg.format, cfg.output)
                return 0 if verdict.passed else 1
            case Command.VERIFY:
                if cfg.theorem == 'all':
                    verdicts = await harness.run_suite()
                else:
                    verdicts = [await harness.verify(cfg.theorem, **cfg.params)]
                emit_report(verdicts if cfg.theorem == 'all' else verdicts[0],
                            cfg.format, cfg.output)
                failed = [v for v in verdicts if v.status is VerdictStatus.FAIL]
                return 1 if failed else 0
    finally:
        await registry.dispose()
    raise EXC(ErrorCode.UsageError, details={'command': cfg.command.value})


def run(argv: list[str] | None = None) -> int:
    """Точка входа CLI: код завершения 0/1/2/3"""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    subject = getattr(args, 'spec', None) or getattr(args, 'theorem', '')
    with TracingService.trace(f'{args.command}:{subject}'):
        try:
            cfg = _run_config(args)
            configure_logging(cfg.log_level)
            return asyncio.run(_dispatch(cfg))
        except EXC as e:
            _logger.error('Команда завершилась ошибкой', extra={'code': e.code.tag})
            payload = e.dump()
            TracingService.emit(payload)
            sys.stderr.write(json.dumps(payload, ensure_ascii=False, default=str) + '\n')
            return e.exit_code


def main() -> None:
    raise SystemExit(run())
