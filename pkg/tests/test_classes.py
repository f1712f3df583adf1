import numpy as np
import pytest

from killform.base_module import EXC, ErrorCode
from killform.models.classes import (
    ClassSelector,
    SelectorKind,
    StableRequirements,
    build_stable_set,
    centralizer,
    classify_classes,
    expected_centralizers,
    generates_group,
    is_real,
    su3_family_classify,
)

from .conftest import class_ids


@pytest.mark.parametrize('spec', ['dihedral:5', 'sym:5', 'psl2:7', 'su3:2', 'sz:8'])
def test_classes_partition_group(bundle, spec):
    T = bundle(spec).table
    G = T.group
    assert sum(c.size for c in T.classes) == G.order
    assert T.classes[0].elt_order == 1
    for c in T.classes:
        assert G.order % c.size == 0
        assert c.size * c.centralizer_order == G.order
        assert (T.class_of[c.members] == c.id).all()
        assert G.encoding_rank[c.rep] == G.encoding_rank[c.members].min()


def test_psl2_7_class_sizes(bundle):
    T = bundle('psl2:7').table
    assert [(c.elt_order, c.size) for c in T.classes] == [
        (1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)
    ]


def test_centralizer_matches_table(bundle):
    T = bundle('psl2:8').table
    for c in T.classes:
        assert centralizer(T.group, c.rep).size == c.centralizer_order


@pytest.mark.parametrize('spec, order, real', [
    ('psl2:13', 13, True),
    ('psl2:7', 7, False),
    ('sz:8', 4, False),
    ('sz:8', 2, True),
])
def test_realness(bundle, spec, order, real):
    T = bundle(spec).table
    ids = class_ids(T, order)
    assert ids
    assert all(is_real(T, cid) is real for cid in ids)


def test_sz8_order4_classes_are_inverse_pair(bundle):
    T = bundle('sz:8').table
    a, b = class_ids(T, 4)
    assert T.inverse_class(a) == b
    assert T[a].size == T[b].size == 1820


def test_su3_2_c3_classes(bundle):
    T = bundle('su3:2').table
    signatures = classify_classes(T)
    c3 = [cid for cid, s in signatures.items() if s.tag == 'C3']
    assert len(c3) == 9
    unipotent = [cid for cid in c3 if signatures[cid].eigenvalues == [1, 1, 1]]
    assert len(unipotent) == 3
    for cid in unipotent:
        assert T[cid].elt_order == 4
        assert T[cid].size == 18
        assert T[cid].centralizer_order == expected_centralizers(2)['C3'] == 12


def test_su3_3_signature_tags(bundle):
    T = bundle('su3:3').table
    tags = {s.tag for s in classify_classes(T).values()}
    assert {'C1', 'C2', 'C3', 'C4', 'C5', 'C8'} <= tags


def test_su3_classifier_rejects_other_families(bundle):
    G = bundle('psl2:7').group
    with pytest.raises(EXC) as e:
        su3_family_classify(G, 1)
    assert e.value.code is ErrorCode.UnsupportedFamily


@pytest.mark.parametrize('text, expected', [
    ('ord=2', 'ord=2'),
    ('order=7, idx=1', 'ord=7,idx=1'),
    ('real', 'real'),
    ('all', 'all-noncentral'),
])
def test_selector_parse(text, expected):
    assert str(ClassSelector.parse(text)) == expected


@pytest.mark.parametrize('text', ['', 'ord', 'real=3', 'bogus=1', 'ord=x', 'ord=2,,'])
def test_selector_parse_errors(text):
    with pytest.raises(EXC) as e:
        ClassSelector.parse(text)
    assert e.value.code is ErrorCode.ParseError


def test_selector_kind_aliases():
    assert SelectorKind.from_string('index') is SelectorKind.IDX
    assert 'noncentral' in SelectorKind.get_all_aliases()
    with pytest.raises(ValueError):
        SelectorKind.from_string('nope')


def test_selector_resolve(bundle):
    T = bundle('psl2:7').table
    assert ClassSelector.parse('ord=7').resolve(T) == [4, 5]
    assert ClassSelector.parse('ord=2,idx=3').resolve(T) == [1, 3]
    assert ClassSelector.parse('all-noncentral').resolve(T) == [1, 2, 3, 4, 5]
    # классы порядка 7 в PSL2(7) не вещественны
    assert ClassSelector.parse('real').resolve(T) == [1, 2, 3]


@pytest.mark.parametrize('text', ['ord=11', 'idx=99'])
def test_selector_resolve_errors(bundle, text):
    T = bundle('psl2:7').table
    with pytest.raises(EXC) as e:
        ClassSelector.parse(text).resolve(T)
    assert e.value.code is ErrorCode.ValidationError


def test_stable_set_members(bundle):
    T = bundle('sym:4').table
    C = build_stable_set(T, class_ids(T, 2))
    assert C.size == 9
    assert not C.single_class
    assert (np.diff(C.members) > 0).all()
    assert C.position_of(C.members).tolist() == list(range(9))
    assert not C.contains([T.classes[0].rep]).any()


def test_stable_set_rejects_identity_and_central(bundle):
    with pytest.raises(EXC) as e:
        build_stable_set(bundle('sym:4').table, [0])
    assert e.value.code is ErrorCode.ValidationError

    T = bundle('sl2:5').table
    central = [c.id for c in T.classes if c.is_central and c.id != 0]
    with pytest.raises(EXC) as e:
        build_stable_set(T, central)
    assert e.value.details['reason'] == 'central class'


def test_stable_set_requirements(bundle):
    T = bundle('psl2:7').table
    with pytest.raises(EXC) as e:
        build_stable_set(T, [4], StableRequirements(real=True))
    assert e.value.details['reason'] == 'class is not real'

    S4 = bundle('sym:4').table
    threes = class_ids(S4, 3)
    assert not generates_group(S4, threes)
    with pytest.raises(EXC) as e:
        build_stable_set(S4, threes, StableRequirements(generates=True))
    assert e.value.details['generated_order'] == 12

    C = build_stable_set(T, [1], StableRequirements(generates=True, real=True))
    assert C.single_class and C.size == 21


def test_empty_class_set(bundle):
    with pytest.raises(EXC) as e:
        build_stable_set(bundle('psl2:7').table, [])
    assert e.value.code is ErrorCode.ValidationError
