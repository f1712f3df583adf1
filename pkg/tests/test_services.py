import asyncio

import pytest

from killform.base_module import ClassesLoggerAdapter, EXC, ErrorCode
from killform.config import CapsConfig, KillformConfig
from killform.injectors import GroupRegistryInj
from killform.services import (
    KillingService,
    OutputFormat,
    TracingService,
    emit_report,
    render_report,
)


def _run(config, coro_fn):
    async def scenario():
        registry = GroupRegistryInj(config)
        try:
            return await coro_fn(KillingService(registry))
        finally:
            await registry.dispose()

    return asyncio.run(scenario())


def test_killing_above_matrix_cap_adds_note():
    config = KillformConfig(caps=CapsConfig(max_class_matrix=20))
    report, K = _run(config, lambda s: s.killing('psl2:8', 'ord=2'))
    assert K is None
    assert report.det is None and report.degenerate is None
    assert report.graph.component_count == 9
    assert '63' in report.notes[0]


def test_killing_matrix_requested_above_cap():
    config = KillformConfig(caps=CapsConfig(max_class_matrix=20))
    with pytest.raises(EXC) as e:
        _run(config, lambda s: s.killing('psl2:8', 'ord=2', with_matrix=True))
    assert e.value.code is ErrorCode.CapExceeded


def test_killing_with_matrix():
    report, K = _run(KillformConfig(), lambda s: s.killing('sym:4', 'idx=2', with_matrix=True))
    assert K.n == 6
    assert report.degenerate is False
    assert report.det == 32 ** 3


@pytest.mark.parametrize('triple', ['1,2', 'a,b,c', '1,2,3,4'])
def test_count_bad_triple(triple):
    with pytest.raises(EXC) as e:
        _run(KillformConfig(), lambda s: s.count('sym:3', triple))
    assert e.value.code is ErrorCode.ParseError


@pytest.mark.parametrize('triple', ['1,1,3', '1,1,-1'])
def test_count_unknown_target_class(triple):
    with pytest.raises(EXC) as e:
        _run(KillformConfig(), lambda s: s.count('sym:3', triple))
    assert e.value.code is ErrorCode.ValidationError
    assert 'c3' in e.value.details


def test_output_format_lookup():
    assert OutputFormat.from_string('graphviz') is OutputFormat.DOT
    with pytest.raises(ValueError):
        OutputFormat.from_string('yaml')


def test_render_errors():
    with pytest.raises(EXC) as e:
        render_report('text', OutputFormat.CSV)
    assert e.value.code is ErrorCode.UsageError
    with pytest.raises(EXC):
        render_report(42, OutputFormat.DOT)


def test_emit_to_missing_directory(tmp_path):
    with pytest.raises(EXC) as e:
        emit_report('graph {}\n', OutputFormat.DOT, tmp_path / 'no' / 'g.dot')
    assert e.value.code is ErrorCode.IOError


def test_trace_context():
    before = ClassesLoggerAdapter.TRACE_ID.get()
    with TracingService.trace('verify:psl2:8'):
        assert TracingService().trace_id == 'verify:psl2:8'
        carrier = {}
        TracingService.emit(carrier)
        assert carrier == {'trace_id': 'verify:psl2:8'}
    assert ClassesLoggerAdapter.TRACE_ID.get() == before
