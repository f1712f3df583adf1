import numpy as np
import pytest

from killform.base_module import EXC, ErrorCode
from killform.config import CapsConfig, KillformConfig
from killform.models.classes import build_stable_set
from killform.models.killing import (
    UnionFind,
    commuting_graph_components,
    cross_sylow_partner_check,
    graph_to_dot,
    killing_graph_components,
    killing_matrix,
    killing_value,
    read_killing_csv,
    support_function,
)
from killform.models.xlinalg import DetMethod, blockwise_det

from .conftest import class_ids


def _form(bundle, spec, cid, config):
    T = bundle(spec).table
    return support_function(T, build_stable_set(T, [cid]), config)


def _involutions(bundle, spec, config):
    T = bundle(spec).table
    cid, = class_ids(T, 2)
    return _form(bundle, spec, cid, config)


def _fixed_point_involutions(bundle, spec, fixed, config):
    T = bundle(spec).table
    G = T.group
    for c in T.classes:
        if c.elt_order == 2 and int((G.data[c.rep] == np.arange(G.data.shape[1])).sum()) == fixed:
            return _form(bundle, spec, c.id, config)
    raise AssertionError(f'no involutions with {fixed} fixed points in {spec}')


def test_union_find():
    uf = UnionFind(6)
    assert uf.union(0, 3)
    assert not uf.union(3, 0)
    uf.union_many(4, np.array([5, 1]))
    assert uf.components == 3
    assert uf.labels().tolist() == [0, 1, 2, 0, 1, 1]


def test_support_function_basics(bundle, config):
    fn = _involutions(bundle, 'psl2:8', config)
    assert fn.f[0] == fn.set.size == 63
    T = fn.table
    assert fn.f[class_ids(T, 2)[0]] == 7
    # элементы нечётного порядка не централизуют инволюций
    for c in T.classes:
        if c.elt_order % 2:
            assert c.id == 0 or fn.f[c.id] == 0
    assert fn.dump_values()['0'] == 63


def test_psl2_8_involution_graph(bundle, config):
    fn = _involutions(bundle, 'psl2:8', config)
    report = killing_graph_components(fn, config)
    assert report.component_count == 9
    assert report.component_sizes == [7] * 9
    assert report.equals_commuting_graph is True
    assert not report.connected


def test_psl2_8_killing_matrix_blocks(bundle, config):
    fn = _involutions(bundle, 'psl2:8', config)
    K = killing_matrix(fn, None, config)
    assert K.n == 63 and K.component_count == 9
    assert K.is_symmetric() and K.off_block_zero()
    block = 56 * np.eye(7, dtype=np.int64) + 7
    assert all((K.block(i) == block).all() for i in range(9))
    assert (K.row_sums() == 105).all()

    det = blockwise_det(K, fn, config)
    assert det.method is DetMethod.BLOCKWISE
    assert det.det == (7 ** 7 * 8 ** 6 * 15) ** 9
    assert det.rank == 63


def test_sz8_involution_blocks(bundle, config):
    fn = _involutions(bundle, 'sz:8', config)
    report = killing_graph_components(fn, config)
    assert report.component_sizes == [7] * 65
    K = killing_matrix(fn, report, config)
    assert K.n == 455
    assert (np.diagonal(K.entries) == 455).all()
    first = K.block(0)
    assert (first[~np.eye(7, dtype=bool)] == 7).all()
    assert K.off_block_zero()


def test_s4_transpositions(bundle, config):
    fn = _fixed_point_involutions(bundle, 'sym:4', 2, config)
    report = killing_graph_components(fn, config)
    assert report.component_sizes == [2, 2, 2]
    assert report.equals_commuting_graph is True
    K = killing_matrix(fn, report, config)
    for i in range(3):
        assert K.block(i).tolist() == [[6, 2], [2, 6]]


def test_s7_one_fixed_point_is_scalar(bundle, config):
    fn = _fixed_point_involutions(bundle, 'sym:7', 1, config)
    assert fn.set.size == 105
    K = killing_matrix(fn, None, config)
    assert (K.entries == 105 * np.eye(105, dtype=np.int64)).all()
    assert K.component_count == 105


@pytest.mark.slow
@pytest.mark.parametrize('spec', ['alt:9', 'sym:9'])
def test_degree9_one_fixed_point_reducible(bundle, config, spec):
    fn = _fixed_point_involutions(bundle, spec, 1, config)
    assert fn.set.size == 945
    report = killing_graph_components(fn, config, compare_commuting=False)
    assert report.component_count > 1


def test_psl2_9_unipotent_connected_but_not_commuting(bundle, config):
    bundle9 = bundle('psl2:9')
    T = bundle9.table
    cid = class_ids(T, 3)[0]
    fn = _form(bundle, 'psl2:9', cid, config)
    report = killing_graph_components(fn, config)
    assert report.component_count == 1
    assert report.equals_commuting_graph is False
    commuting = commuting_graph_components(T.group, fn.set, config)
    assert commuting.component_count == 10

    partners = cross_sylow_partner_check(fn, bundle9.sylow(3))
    assert partners.unique
    assert partners.killing_matches_partner
    assert partners.permutation_blocks
    assert partners.block_value == 4


def test_partner_check_rejects_even_q(bundle, config):
    fn = _involutions(bundle, 'psl2:8', config)
    with pytest.raises(EXC) as e:
        cross_sylow_partner_check(fn, bundle('psl2:8').sylow(2))
    assert e.value.code is ErrorCode.UnsupportedFamily


@pytest.mark.parametrize('spec, order', [('psl2:7', 7), ('sym:5', 3), ('sz:8', 4)])
def test_form_invariants(bundle, config, spec, order):
    T = bundle(spec).table
    G = T.group
    cid = class_ids(T, order)[0]
    fn = _form(bundle, spec, cid, config)
    members = fn.set.members
    rng = np.random.default_rng(7)
    sample = rng.choice(members, size=min(40, members.size), replace=False)

    values = fn.values_for_products(G.mul(sample[:, None], members[None, :]))
    assert (values.sum(axis=1) == values.sum(axis=1)[0]).all()
    commute = G.commute_mask(sample[:, None], members[None, :])
    assert (values[commute] > 0).all()

    for a, b in zip(sample[:10], sample[10:20]):
        k = killing_value(fn, int(a), int(b))
        assert k == killing_value(fn, int(b), int(a))
        g = int(rng.integers(G.order))
        assert k == killing_value(fn, int(G.conj(a, g)), int(G.conj(b, g)))
        assert killing_value(fn, G.element(int(a)), G.element(int(b))) == k


def test_killing_value_membership(bundle, config):
    fn = _involutions(bundle, 'psl2:8', config)
    with pytest.raises(EXC) as e:
        killing_value(fn, 0, int(fn.set.members[0]))
    assert e.value.code is ErrorCode.MembershipError


def test_graph_and_matrix_caps(bundle):
    tight = KillformConfig(caps=CapsConfig(max_class_graph=10, max_class_matrix=10))
    fn = _involutions(bundle, 'psl2:8', tight)
    with pytest.raises(EXC) as e:
        killing_graph_components(fn, tight)
    assert e.value.code is ErrorCode.CapExceeded
    with pytest.raises(EXC) as e:
        killing_matrix(fn, None, tight)
    assert e.value.details['max_class_matrix'] == 10


def test_matrix_csv(bundle, config, tmp_path):
    fn = _fixed_point_involutions(bundle, 'sym:4', 2, config)
    K = killing_matrix(fn, None, config)
    text = K.to_csv('sym:4', 'idx=2')
    header, *rows = text.splitlines()
    assert header == '# killing-matrix group=sym:4 class=idx=2 order=component-grouped'
    assert len(rows) == 6

    path = tmp_path / 'k.csv'
    path.write_text(text)
    assert (read_killing_csv(path) == K.entries).all()


@pytest.mark.parametrize('content, code', [
    ('1,2\n3\n', ErrorCode.DimensionMismatch),
    ('1,x\n3,4\n', ErrorCode.ParseError),
    ('# only a header\n', ErrorCode.DimensionMismatch),
])
def test_read_csv_errors(tmp_path, content, code):
    path = tmp_path / 'bad.csv'
    path.write_text(content)
    with pytest.raises(EXC) as e:
        read_killing_csv(path)
    assert e.value.code is code


def test_read_csv_missing_file(tmp_path):
    with pytest.raises(EXC) as e:
        read_killing_csv(tmp_path / 'missing.csv')
    assert e.value.code is ErrorCode.IOError


def test_graph_to_dot(bundle, config):
    fn = _fixed_point_involutions(bundle, 'sym:4', 2, config)
    report = killing_graph_components(fn, config)
    dot = graph_to_dot(fn, report, config, title='s4')
    lines = dot.splitlines()
    assert lines[0] == 'graph "s4" {' and lines[-1] == '}'
    assert sum('[label=' in line for line in lines) == 6
    assert sum(' -- ' in line for line in lines) == 3

    tight = KillformConfig(caps=CapsConfig(max_class_matrix=2))
    assert ' -- ' not in graph_to_dot(fn, report, tight)
