import asyncio
import json

import pytest

from killform.base_module import EXC, ErrorCode
from killform.injectors import GroupRegistryInj
from killform.models.harness import (
    DEFAULT_SUITE,
    GENS_DIR,
    Theorem,
    VerdictBuilder,
    VerdictStatus,
    resolve_gens,
    trace_id,
)
from killform.services import HarnessService


def _assert_pass(verdict):
    failed = [e.claim for e in verdict.evidence if not e.ok]
    assert verdict.status is VerdictStatus.PASS, failed
    assert verdict.passed and verdict.evidence


@pytest.mark.parametrize('theorem, params', [
    (Theorem.RANK1_INVOLUTIONS, {'q': 4}),
    (Theorem.RANK1_INVOLUTIONS, {'q': 5}),
    (Theorem.RANK1_INVOLUTIONS, {'q': 8, 'family': 'psl2'}),
    (Theorem.RANK1_INVOLUTIONS, {'q': 8, 'family': 'sz'}),
    (Theorem.PSL2_UNIPOTENT, {'q': 5}),
    (Theorem.PSL2_UNIPOTENT, {'q': 9}),
    (Theorem.PSL2_UNIPOTENT, {'q': 13}),
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'psl2:9', 'p': 3}),
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'sz:8', 'p': 2}),
    (Theorem.SU3_FUSION, {'q': 2}),
    (Theorem.SU3_UNIPOTENT, {'q': 3}),
    (Theorem.PSU3_C2_ODD, {'q': 3}),
    (Theorem.SUZUKI_ORDER4, {'q': 8}),
    (Theorem.SYM_ALT, {'n': 4}),
    (Theorem.SYM_ALT, {'n': 7}),
    (Theorem.DIHEDRAL_STRONG, {'n': 5}),
    (Theorem.DIHEDRAL_STRONG, {'n': 9}),
    (Theorem.CONJECTURE_SCAN, {'spec': 'psl2:5'}),
    (Theorem.QUOTIENT_LIFTING, {'q': 5}),
    (Theorem.PRODUCT_GRAPH, {'n': 5}),
    (Theorem.STRONGLY_P_EMBEDDED, {'gens': 'm11.gens', 'p': 3}),
])
def test_procedures_pass(provider, theorem, params):
    _assert_pass(theorem.run(provider, **params))


@pytest.mark.slow
@pytest.mark.parametrize('theorem, params', [
    (Theorem.PSU3_C2_ODD, {'q': 5}),
    (Theorem.SU3_UNIPOTENT, {'q': 5}),
    (Theorem.UNIPOTENT_IRREDUCIBLE, {'spec': 'su3:4', 'p': 2}),
])
def test_procedures_pass_large(provider, theorem, params):
    _assert_pass(theorem.run(provider, **params))


def test_m11_order3_class_irreducible(provider):
    spec = f"perm:{GENS_DIR / 'm11.gens'}"
    _assert_pass(Theorem.UNIPOTENT_IRREDUCIBLE.run(provider, spec=spec, p=3))


@pytest.mark.slow
def test_sym_alt_10_five_elements(provider):
    verdict = Theorem.SYM_ALT.run(provider, n=10)
    _assert_pass(verdict)
    observed = {e.claim: e.observed for e in verdict.evidence}
    for tag in ('sym', 'alt'):
        assert observed[f'{tag}:10 classes of order 5'] == 2
        connected = [
            claim for claim in observed
            if claim.startswith(f'{tag}:10 class ') and claim.endswith('of order 5 connected')
        ]
        assert len(connected) == 2


def test_sym_alt_small_n_skips_five_elements(provider):
    verdict = Theorem.SYM_ALT.run(provider, n=6)
    assert not any('of order 3' in e.claim for e in verdict.evidence)


@pytest.mark.parametrize('spec', ['cyclic:6', 'cyclic:7'])
def test_scan_without_real_noncentral_classes(provider, spec):
    verdict = Theorem.CONJECTURE_SCAN.run(provider, spec=spec)
    _assert_pass(verdict)
    assert [(e.expected, e.observed) for e in verdict.evidence] == [(0, 0)]
    assert verdict.notes


def test_resolve_gens(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert resolve_gens('m11.gens') == GENS_DIR / 'm11.gens'
    assert resolve_gens('gens/m11.gens') == GENS_DIR / 'm11.gens'
    local = tmp_path / 'm11.gens'
    local.write_text('degree 3\n2 3 1\n')
    assert resolve_gens('m11.gens') == local.relative_to(tmp_path)
    assert resolve_gens(str(local)) == local


@pytest.mark.slow
def test_psu3_4_involutions(provider):
    verdict = Theorem.RANK1_INVOLUTIONS.run(provider, q=4, family='psu3')
    _assert_pass(verdict)
    observed = {e.claim: e.observed for e in verdict.evidence}
    assert observed['class size'] == 195
    assert observed['components equal Sylow 2-subgroups'] == 65
    assert verdict.notes


def test_psl2_8_involution_evidence(provider):
    verdict = Theorem.RANK1_INVOLUTIONS.run(provider, q=8)
    observed = {e.claim: e.observed for e in verdict.evidence}
    assert observed['class size'] == 63
    assert observed['component sizes'] == [7] * 9
    assert observed['block determinant (q-1)^(q-1) q^(q-2) (2q-1)'] == 7 ** 7 * 8 ** 6 * 15


def test_dihedral_notes_alternative_form(provider):
    verdict = Theorem.DIHEDRAL_STRONG.run(provider, n=3)
    _assert_pass(verdict)
    assert any('-840' in note and '-1539' in note for note in verdict.notes)


def test_missing_generator_file_is_skipped(provider, tmp_path):
    verdict = Theorem.STRONGLY_P_EMBEDDED.run(provider, gens=str(tmp_path / 'none.gens'))
    assert verdict.status is VerdictStatus.SKIP
    assert verdict.passed and not verdict.evidence


def test_verdict_json_shape(provider):
    verdict = Theorem.DIHEDRAL_STRONG.run(provider, n=3)
    data = json.loads(json.dumps(verdict.dump()))
    assert list(data) == ['theorem', 'params', 'pass', 'status', 'evidence', 'notes']
    assert data['pass'] is True and data['status'] == 'PASS'
    assert data['params'] == {'n': 3}
    assert set(data['evidence'][0]) == {'claim', 'expected', 'observed'}


def test_builder_without_rows_fails():
    verdict = VerdictBuilder('empty').build()
    assert verdict.status is VerdictStatus.FAIL and not verdict.passed


def test_theorem_lookup():
    assert Theorem.from_string('scan') is Theorem.CONJECTURE_SCAN
    assert 'rank1-involutions' in Theorem.get_all_aliases()
    with pytest.raises(ValueError):
        Theorem.from_string('nope')


@pytest.mark.parametrize('theorem, params, code', [
    (Theorem.RANK1_INVOLUTIONS, {}, ErrorCode.UsageError),
    (Theorem.SYM_ALT, {'n': 5, 'bogus': 1}, ErrorCode.UsageError),
    (Theorem.RANK1_INVOLUTIONS, {'q': 8, 'family': 'sym'}, ErrorCode.UnsupportedFamily),
    (Theorem.DIHEDRAL_STRONG, {'n': 4}, ErrorCode.ValidationError),
    (Theorem.PSL2_UNIPOTENT, {'q': 8}, ErrorCode.ValidationError),
    (Theorem.SYM_ALT, {'n': 11}, ErrorCode.ValidationError),
])
def test_procedure_errors(provider, theorem, params, code):
    with pytest.raises(EXC) as e:
        theorem.run(provider, **params)
    assert e.value.code is code


def test_default_suite_is_runnable():
    for theorem, params in DEFAULT_SUITE:
        assert all(params.get(name) is not None for name in theorem.required)
    tags = {theorem for theorem, _ in DEFAULT_SUITE}
    assert tags == set(Theorem)


def test_trace_id():
    assert trace_id(Theorem.RANK1_INVOLUTIONS, {'q': 8, 'family': 'psl2'}) == \
        'rank1-involutions:family=psl2,q=8'
    assert trace_id(Theorem.SUZUKI_ORDER4, {}) == 'suzuki-order4'


def test_harness_service_suite(config):
    suite = [
        (Theorem.DIHEDRAL_STRONG, {'n': 5}),
        (Theorem.DIHEDRAL_STRONG, {'n': 4}),
        (Theorem.RANK1_INVOLUTIONS, {'q': 5}),
    ]

    async def scenario():
        registry = GroupRegistryInj(config)
        try:
            return await HarnessService(registry, concurrency=2).run_suite(suite)
        finally:
            await registry.dispose()

    verdicts = asyncio.run(scenario())
    assert [v.theorem for v in verdicts] == [
        'dihedral-strong', 'dihedral-strong', 'rank1-involutions'
    ]
    assert [v.status for v in verdicts] == [
        VerdictStatus.PASS, VerdictStatus.FAIL, VerdictStatus.PASS
    ]
    assert 'validation_error' in verdicts[1].notes[0]


def test_harness_service_unknown_tag(config):
    async def scenario():
        return await HarnessService(GroupRegistryInj(config)).verify('nope')

    with pytest.raises(EXC) as e:
        asyncio.run(scenario())
    assert e.value.code is ErrorCode.UsageError


def test_registry_acquire_builds_table(config):
    async def scenario():
        registry = GroupRegistryInj(config)
        bundle = await registry.acquire('psl2:7')
        again = await registry.acquire('psl2:7')
        await registry.dispose()
        return bundle, again

    bundle, again = asyncio.run(scenario())
    assert bundle is again
    assert len(bundle.table) == 6
