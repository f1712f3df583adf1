import numpy as np
import pytest

from killform.base_module import EXC, ErrorCode
from killform.models.harness import GENS_DIR
from killform.models.groups import (
    Family,
    GroupElement,
    GroupSpec,
    elem_op,
    ingest_perm_generators,
    make_group,
    parse_perm_generators,
    quotient_by_center,
    sylow_structure,
)


@pytest.mark.parametrize('spec, order', [
    ('cyclic:7', 7),
    ('dihedral:5', 10),
    ('sym:5', 120),
    ('alt:5', 60),
    ('symprod:3', 36),
    ('sl2:5', 120),
    ('gl2:3', 48),
    ('psl2:7', 168),
    ('psl2:8', 504),
    ('pgl2:5', 120),
    ('su3:2', 216),
    ('gu3:2', 648),
    ('psu3:2', 72),
    ('su3:3', 6048),
    ('sz:8', 29120),
])
def test_group_orders(bundle, spec, order):
    assert bundle(spec).group.order == order


def test_projected_order_matches_formula():
    spec = GroupSpec.parse('psu3:4')
    assert spec.family is Family.PSU3
    assert spec.projected_order() == 62400


@pytest.mark.parametrize('text', ['nosuch:7', 'psl2', 'psl2:6', 'sz:4', 'sym:x'])
def test_spec_parse_errors(text):
    with pytest.raises(EXC) as e:
        GroupSpec.parse(text)
    assert e.value.code is ErrorCode.ParseError


def test_order_cap_is_checked_up_front():
    with pytest.raises(EXC) as e:
        make_group('sym:10', max_order=1000)
    assert e.value.code is ErrorCode.CapExceeded


def test_quotient_by_center(bundle):
    sl2 = bundle('sl2:5').group
    assert sl2.center().size == 2
    psl2 = quotient_by_center(sl2)
    assert psl2.order == 60
    assert psl2.kind.spec == 'sl2:5/Z'


@pytest.mark.slow
def test_su3_5_quotient():
    su3 = make_group('su3:5')
    assert su3.order == 378000
    assert su3.center().size == 3
    assert quotient_by_center(su3).order == 126000


def test_permutation_product_convention(bundle):
    G = bundle('sym:3').group
    g = GroupElement.from_rows(G, [1, 0, 2])
    h = GroupElement.from_rows(G, [0, 2, 1])
    assert (g * h).data.tolist() == [1, 2, 0]


def test_element_operations(bundle):
    G = bundle('psl2:7').group
    rng = np.random.default_rng(7)
    a, b, c = (G.element(i) for i in rng.integers(0, G.order, 3))
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity
    assert a.conj(b) == b * a * b.inverse()
    assert a.conj(b).order() == a.order()
    assert G.decode(a.encode()) == a.index
    assert elem_op(a, None, 'inv') == a.inverse()
    assert elem_op(a, b, '*') == a * b


def test_element_orders_divide_group_order(bundle):
    G = bundle('sz:8').group
    orders = G.element_orders(np.arange(G.order))
    assert set(orders.tolist()) == {1, 2, 4, 5, 7, 13}
    assert (G.order % orders == 0).all()


def test_membership_error(bundle):
    G = bundle('sym:3').group
    H = bundle('sym:4').group
    with pytest.raises(EXC) as e:
        G.element(1) * H.element(1)
    assert e.value.code is ErrorCode.MembershipError


def test_generated_order(bundle):
    G = bundle('dihedral:5').group
    rotations = [i for i in range(G.order) if G.element_order(i) == 5]
    assert G.generated_order(rotations) == 5
    assert G.generated_order(range(G.order)) == 10


@pytest.mark.parametrize('spec, p, count, order', [
    ('psl2:8', 2, 9, 8),
    ('psl2:7', 7, 8, 7),
    ('sz:8', 2, 65, 64),
    ('su3:3', 3, 28, 27),
    ('psu3:4', 2, 65, 64),
    ('dihedral:5', 2, 5, 2),
    ('dihedral:15', 3, 1, 3),
])
def test_sylow_subgroups(bundle, spec, p, count, order):
    S = bundle(spec).sylow(p)
    assert S.count == count
    assert S.subgroup_order == order
    assert all(sub.size == order for sub in S.subgroups)


def test_sylow_ti_in_rank_one(bundle):
    for spec, p in [('psl2:8', 2), ('sz:8', 2), ('su3:3', 3)]:
        assert bundle(spec).sylow(p).ti


def test_sylow_needs_characteristic(bundle):
    with pytest.raises(EXC) as e:
        sylow_structure(bundle('psl2:7').group, 3)
    assert e.value.code is ErrorCode.UnsupportedFamily


def test_perm_file_ingestion(tmp_path):
    path = tmp_path / 's4.gens'
    path.write_text('# S4\ndegree 4\n2 1 3 4\n2 3 4 1\n')
    G = ingest_perm_generators(path)
    assert G.order == 24
    assert G.kind.family == 'perm'
    assert make_group(f'perm:{path}').order == 24


@pytest.mark.parametrize('text, code', [
    ('', ErrorCode.ParseError),
    ('deg 4\n', ErrorCode.ParseError),
    ('degree 4\n1 2 3\n', ErrorCode.DimensionMismatch),
    ('degree 3\n1 1 2\n', ErrorCode.ParseError),
    ('degree 3\n1 a 2\n', ErrorCode.ParseError),
])
def test_perm_file_errors(text, code):
    with pytest.raises(EXC) as e:
        parse_perm_generators(text)
    assert e.value.code is code


def test_missing_perm_file(tmp_path):
    with pytest.raises(EXC) as e:
        ingest_perm_generators(tmp_path / 'absent.gens')
    assert e.value.code is ErrorCode.IOError


def test_shipped_m11_generators():
    G = ingest_perm_generators(GENS_DIR / 'm11.gens')
    assert G.order == 7920


@pytest.mark.parametrize('spec', ['su3:2', 'su3:3', 'gu3:3'])
def test_unitary_groups_preserve_form(bundle, spec):
    G = bundle(spec).group
    F = G.realization.field
    add, mul = F.tables()
    conj = np.array([F.pow(x, F.subfield_order) for x in range(F.q)], dtype=np.intp)
    A = G.data.reshape(-1, 3, 3).astype(np.intp)
    C = conj[A]
    # (g* J g)[i, j] = sum_k conj(g[k, i]) g[2 - k, j]
    M = mul[C[:, 0, :, None], A[:, 2, None, :]]
    for k in (1, 2):
        M = add[M, mul[C[:, k, :, None], A[:, 2 - k, None, :]]]
    J = np.fliplr(np.eye(3, dtype=M.dtype))
    assert (M == J).all()
