import itertools
import math
from pathlib import Path

import numpy as np
from sympy import isprime, multiplicity

from ...base_module import EXC, ErrorCode
from ..classes import (
    ClassTable,
    StableRequirements,
    build_stable_set,
    is_real,
    su3_family_classify,
)
from ..counting import (
    class_product_histogram,
    nonzero_pair_count,
    same_sylow_pair_count,
    suzuki_closed_forms,
)
from ..groups import Family, GroupSpec
from ..killing import (
    ClassSupportFn,
    cross_sylow_partner_check,
    killing_graph_components,
    killing_matrix,
    support_function,
)
from ..xlinalg import (
    ExactMatrix,
    bareiss_det_rank,
    blockwise_det,
    dihedral_det_closed_form,
    dihedral_det_printed,
)
from .provider import GroupBundle, GroupProvider
from .verdict import Verdict, VerdictBuilder

# каталог образующих, поставляемых с пакетом
GENS_DIR = Path(__file__).resolve().parents[2] / 'gens'

# размер класса инволюций при чётном q
_INVOLUTION_CLASS_SIZE = {
    Family.PSL2: lambda q: q * q - 1,
    Family.PSU3: lambda q: (q ** 3 + 1) * (q - 1),
    Family.SZ: lambda q: (q * q + 1) * (q - 1),
}


def _is_p_power(n: int, p: int) -> bool:
    return n > 1 and p ** multiplicity(p, n) == n


def _p_classes(T: ClassTable, p: int) -> list[int]:
    return [
        c.id for c in T.classes
        if not c.is_central and _is_p_power(c.elt_order, p)
    ]


def _class_form(bundle: GroupBundle, cid: int, provider: GroupProvider) -> ClassSupportFn:
    S = build_stable_set(bundle.table, [cid])
    return support_function(bundle.table, S, provider.config)


def _characteristic(bundle: GroupBundle) -> int | None:
    field = getattr(bundle.group.realization, 'field', None)
    return field.p if field is not None else None


def verify_rank_one_involutions(
        provider: GroupProvider, q: int, family: str = 'psl2'
) -> Verdict:
    fam = Family.from_string(family)
    if fam not in _INVOLUTION_CLASS_SIZE:
        raise EXC(
            ErrorCode.UnsupportedFamily,
            details={'family': family, 'expected': 'psl2, psu3 or sz'}
        )
    spec = GroupSpec.parse(f'{fam.tag}:{q}').text
    b = VerdictBuilder('rank1-involutions', family=fam.tag, q=q)
    bundle = provider.bundle(spec)
    T = bundle.table

    involutions = [c.id for c in T.classes if c.elt_order == 2 and not c.is_central]
    if not b.check('single class of involutions', 1, len(involutions)):
        return b.build()
    cid = involutions[0]
    fn = _class_form(bundle, cid, provider)
    report = killing_graph_components(fn, provider.config, compare_commuting=True)
    even = q % 2 == 0
    b.check('reducible iff q is even', even, report.component_count > 1)

    if not even:
        b.check('single component', 1, report.component_count)
        return b.build()

    size = _INVOLUTION_CLASS_SIZE[fam](q)
    b.check('class size', size, T[cid].size)
    if fam is Family.PSU3:
        b.note(
            f'class of involutions has (q^3+1)(q-1) = {size} elements; '
            f'the count q^3(q-1) = {q ** 3 * (q - 1)} does not match the class table'
        )
    sylow = bundle.sylow(2)
    b.check('Killing graph equals commuting graph', True, report.equals_commuting_graph)
    b.check('components equal Sylow 2-subgroups', sylow.count, report.component_count)
    b.check('component sizes', [q - 1] * sylow.count, report.component_sizes)

    K = killing_matrix(fn, report, provider.config)
    m = q - 1
    expected_block = (size - m) * np.eye(m, dtype=np.int64) + m * np.ones((m, m), dtype=np.int64)
    b.check(
        'every block has diagonal |C| and off-diagonal q-1',
        True,
        all((K.block(i) == expected_block).all() for i in range(K.component_count)),
    )
    det = blockwise_det(K, fn, provider.config)
    b.check('block determinant nonzero', True, det.nonzero)
    if fam is Family.PSL2:
        # det((q-1)(qI + Θ)) на блоке размера q-1
        closed = m ** m * q ** (m - 1) * (q + m)
        block = bareiss_det_rank(ExactMatrix.from_numpy(K.block(0)))
        b.check('block determinant (q-1)^(q-1) q^(q-2) (2q-1)', closed, block.det)
    b.note('component stabilizer subgroup not identified')
    return b.build()


def _check_p_classes(
        b: VerdictBuilder, bundle: GroupBundle, p: int, provider: GroupProvider
) -> None:
    T = bundle.table
    fam = Family.from_string(bundle.group.kind.family)
    even_rank_one = fam.rank_one and _characteristic(bundle) == 2
    ids = _p_classes(T, p)
    if not b.check('classes of nontrivial p-elements found', True, bool(ids)):
        return
    for cid in ids:
        c = T[cid]
        fn = _class_form(bundle, cid, provider)
        report = killing_graph_components(fn, provider.config, compare_commuting=False)
        claim = f'class {cid} (order {c.elt_order}, size {c.size}) connected'
        if c.elt_order == 2:
            if even_rank_one:
                b.check(claim, False, report.connected)
                continue
            if p == 2:
                b.note(f'{claim}: {report.connected} (no expectation for involutions)')
                continue
        b.check(claim, True, report.connected)


def verify_unipotent_irreducible(provider: GroupProvider, spec: str, p: int) -> Verdict:
    b = VerdictBuilder('unipotent-irreducible', spec=spec, p=p)
    _check_p_classes(b, provider.bundle(spec), p, provider)
    return b.build()


def resolve_gens(gens: str) -> Path:
    """Относительный путь, которого нет в рабочем каталоге, ищется в GENS_DIR"""
    path = Path(gens)
    if path.is_absolute() or path.is_file():
        return path
    return GENS_DIR / path.name


def verify_strongly_p_embedded(provider: GroupProvider, gens: str, p: int = 3) -> Verdict:
    b = VerdictBuilder('strongly-p-embedded', gens=gens, p=p)
    path = resolve_gens(gens)
    if not path.is_file():
        return b.skip(f'generator file {gens} not found').build()
    _check_p_classes(b, provider.bundle(f'perm:{path}'), p, provider)
    return b.build()


def verify_psl2_unipotent(provider: GroupProvider, q: int) -> Verdict:
    b = VerdictBuilder('psl2-unipotent', q=q)
    if q % 2 == 0:
        raise EXC(ErrorCode.ValidationError, details={'q': q, 'reason': 'q must be odd'})
    bundle = provider.bundle(f'psl2:{q}')
    T = bundle.table
    p = _characteristic(bundle)
    ids = [c.id for c in T.classes if c.elt_order == p]
    if not b.check('unipotent classes', 2, len(ids)):
        return b.build()
    sylow = bundle.sylow(p)
    for cid in ids:
        c = T[cid]
        b.check(f'class {cid} size', (q * q - 1) // 2, c.size)
        b.check(f'class {cid} real iff q = 1 mod 4', q % 4 == 1, is_real(T, cid))
        b.check(
            f'class {cid} meets a Sylow subgroup in (q-1)/2 elements',
            (q - 1) // 2, int(np.isin(sylow.subgroups[0], c.members).sum()),
        )
        fn = _class_form(bundle, cid, provider)
        report = killing_graph_components(fn, provider.config, compare_commuting=False)
        b.check(f'class {cid} connected', True, report.connected)
        partners = cross_sylow_partner_check(fn, sylow)
        b.check(f'class {cid} unique partner in every other Sylow', True, partners.unique)
        b.check(f'class {cid} K nonzero exactly on partners', True,
                partners.killing_matches_partner)
        b.check(f'class {cid} cross-Sylow blocks are scaled permutations', True,
                partners.permutation_blocks)
    return b.build()


def verify_psu3_c2_odd(provider: GroupProvider, q: int) -> Verdict:
    b = VerdictBuilder('psu3-c2-odd', q=q)
    if q % 2 == 0:
        raise EXC(ErrorCode.ValidationError, details={'q': q, 'reason': 'q must be odd'})
    bundle = provider.bundle(f'su3:{q}')
    G, T = bundle.group, bundle.table
    F = G.realization.field
    sigs = bundle.su3_signatures
    c2 = [cid for cid, s in sigs.items() if s.tag == 'C2' and s.eigenvalues == [1, 1, 1]]
    if not b.check('unipotent C2 classes', 1, len(c2)):
        return b.build()
    cid = c2[0]
    fn = _class_form(bundle, cid, provider)
    report = killing_graph_components(fn, provider.config, compare_commuting=False)
    b.check('C2 class connected', True, report.connected)

    sylow = bundle.sylow(F.p)
    members = T[cid].members
    x = int(np.intersect1d(sylow.subgroups[0], members)[0])
    minus = sorted([F.neg(1), F.neg(1), 1])
    is_c5 = np.array([
        sigs[c].tag == 'C5' and sigs[c].eigenvalues == minus
        and sigs[c].centralizer_order == q * (q + 1)
        for c in range(len(T))
    ])
    is_c4 = np.array([sigs[c].tag == 'C4' for c in range(len(T))])

    mismatched, in_c4, with_partner, products = 0, 0, 0, 0
    for other in sylow.subgroups[1:]:
        ys = np.intersect1d(other, members)
        prod_classes = T.class_of[G.mul(x, ys)]
        nonzero = fn.f[prod_classes] > 0
        mismatched += int((nonzero != is_c5[prod_classes]).sum())
        in_c4 += int(is_c4[prod_classes].sum())
        with_partner += int(nonzero.any())
        products += ys.size
    b.check('nonzero K exactly on products with eigenvalues {-1,-1,1}', 0, mismatched)
    b.check('other Sylow subgroups holding such a y', sylow.count - 1, with_partner)
    b.check('cross-Sylow products in C4 classes', 0, in_c4)
    b.note(f'{products} cross-Sylow products examined')
    if math.gcd(3, q + 1) == 3:
        b.note('checked in su3:q; the centre has order 3')
    return b.build()


def verify_su3_unipotent(provider: GroupProvider, q: int) -> Verdict:
    b = VerdictBuilder('su3-unipotent', q=q)
    bundle = provider.bundle(f'su3:{q}')
    T = bundle.table
    sigs = bundle.su3_signatures
    unipotent = [
        cid for cid, s in sigs.items()
        if s.tag in ('C2', 'C3') and s.eigenvalues == [1, 1, 1]
    ]
    c3 = [cid for cid in unipotent if sigs[cid].tag == 'C3']
    b.check('unipotent C3 classes', math.gcd(3, q + 1), len(c3))
    for cid in unipotent:
        c = T[cid]
        fn = _class_form(bundle, cid, provider)
        report = killing_graph_components(fn, provider.config, compare_commuting=False)
        b.check(
            f'class {cid} ({sigs[cid].tag}, order {c.elt_order}) connected',
            c.elt_order != 2, report.connected,
        )
    return b.build()


def verify_su3_fusion(provider: GroupProvider, q: int) -> Verdict:
    """Слияние классов C3 при переходе SU3 -> PSU3 и SU3 -> GU3."""
    b = VerdictBuilder('su3-fusion', q=q)
    d = math.gcd(3, q + 1)
    su3 = provider.bundle(f'su3:{q}')
    sigs = su3.su3_signatures
    c3 = [cid for cid, s in sigs.items() if s.tag == 'C3']
    b.check('C3 classes in su3', d * d, len(c3))
    b.check(
        'unipotent C3 classes in su3', d,
        sum(1 for cid in c3 if sigs[cid].eigenvalues == [1, 1, 1]),
    )

    psu3 = provider.bundle(f'psu3:{q}')
    R = psu3.group.realization
    reps = su3.group.data[[su3.table[cid].rep for cid in c3]]
    images = psu3.group.index_of(R.canonical(reps))
    b.check('C3 images in psu3', d, len(set(psu3.table.class_of[images].tolist())))

    gu3 = provider.bundle(f'gu3:{q}')
    p = _characteristic(gu3)
    G = gu3.group
    gu3_c3 = [
        c.id for c in gu3.table.classes
        if _is_p_power(c.elt_order, p)
        and su3_family_classify(G, c.rep, gu3.table).tag == 'C3'
    ]
    b.check('unipotent C3 classes in gu3', 1, len(gu3_c3))
    return b.build()


def _fixed_points(bundle: GroupBundle, x: int) -> int:
    row = bundle.group.data[x]
    return int((row == np.arange(row.size)).sum())


def _involution_reducible(fam: Family, n: int, s: int) -> bool:
    if fam is Family.ALT:
        return n % 4 == 1 and s == 1
    return s == 1 or (n, s) == (4, 2)


def verify_sym_alt(provider: GroupProvider, n: int) -> Verdict:
    b = VerdictBuilder('sym-alt', n=n)
    if not 3 <= n <= 10:
        raise EXC(ErrorCode.ValidationError, details={'n': n, 'range': [3, 10]})
    for fam in (Family.SYM, Family.ALT):
        bundle = provider.bundle(f'{fam.tag}:{n}')
        T = bundle.table
        for c in T.classes:
            if c.is_central or c.elt_order != 2:
                continue
            s = _fixed_points(bundle, c.rep)
            fn = _class_form(bundle, c.id, provider)
            report = killing_graph_components(fn, provider.config, compare_commuting=False)
            expected = _involution_reducible(fam, n, s)
            b.check(
                f'{fam.tag}:{n} involutions with {s} fixed points reducible',
                expected, report.component_count > 1,
            )
            if not expected:
                continue
            K = killing_matrix(fn, report, provider.config)
            if s == 1:
                scalar = c.size * np.eye(c.size, dtype=np.int64)
                b.check(f'{fam.tag}:{n} s=1: K = |C| I', c.size,
                        c.size if (K.entries == scalar).all() else -1)
            det = blockwise_det(K, fn, provider.config)
            b.check(f'{fam.tag}:{n} s={s}: K non-degenerate', True, det.nonzero)

        if n in (5, 7):
            for cid in [c.id for c in T.classes if c.elt_order == n]:
                fn = _class_form(bundle, cid, provider)
                report = killing_graph_components(fn, provider.config, compare_commuting=False)
                b.check(f'{fam.tag}:{n} class {cid} of order {n} connected', True,
                        report.connected)

        if n % 2 == 0 and n // 2 >= 5 and isprime(n // 2):
            p = n // 2
            p_classes = [c.id for c in T.classes if c.elt_order == p]
            # один p-цикл или два
            b.check(f'{fam.tag}:{n} classes of order {p}', 2, len(p_classes))
            for cid in p_classes:
                fn = _class_form(bundle, cid, provider)
                report = killing_graph_components(fn, provider.config, compare_commuting=False)
                b.check(f'{fam.tag}:{n} class {cid} of order {p} connected', True,
                        report.connected)
    return b.build()


def verify_dihedral_strong(provider: GroupProvider, n: int) -> Verdict:
    b = VerdictBuilder('dihedral-strong', n=n)
    if n % 2 == 0 or not 3 <= n <= 25:
        raise EXC(ErrorCode.ValidationError, details={'n': n, 'reason': 'odd n in [3, 25]'})
    bundle = provider.bundle(f'dihedral:{n}')
    T = bundle.table
    reflections = [c.id for c in T.classes if c.elt_order == 2]
    rotations = [c.id for c in T.classes if c.elt_order > 2]
    subsets = 2 ** len(rotations)
    if subsets > provider.config.caps.max_subsets:
        raise EXC(
            ErrorCode.CapExceeded,
            details={'subsets': subsets, 'max_subsets': provider.config.caps.max_subsets}
        )
    require = StableRequirements(generates=True, real=True)
    nonzero, checked = 0, 0
    for m in range(len(rotations) + 1):
        for chosen in itertools.combinations(rotations, m):
            ids = reflections + list(chosen)
            S = build_stable_set(T, ids, require)
            fn = support_function(T, S, provider.config)
            K = killing_matrix(fn, None, provider.config)
            det = bareiss_det_rank(ExactMatrix.from_numpy(K.entries))
            closed = dihedral_det_closed_form(n, m)
            b.check(f'classes {ids}: det matches closed form', int(closed), det.det)
            nonzero += int(det.nonzero)
            checked += 1
    b.check('generating subsets enumerated', subsets, checked)
    b.check('non-degenerate subsets', subsets, nonzero)
    if rotations:
        b.note(
            f'alternative closed form at m=1 gives {dihedral_det_printed(n, 1)}, '
            f'direct determinant {dihedral_det_closed_form(n, 1)}'
        )
    return b.build()


def conjecture_scan(provider: GroupProvider, spec: str) -> Verdict:
    b = VerdictBuilder('conjecture-scan', spec=spec)
    bundle = provider.bundle(spec)
    T = bundle.table
    real = [c for c in T.classes if not c.is_central and is_real(T, c.id)]
    scanned = 0
    for c in real:
        fn = _class_form(bundle, c.id, provider)
        report = killing_graph_components(fn, provider.config, compare_commuting=False)
        K = killing_matrix(fn, report, provider.config)
        det = blockwise_det(K, fn, provider.config)
        b.check(
            f'class {c.id} (order {c.elt_order}, size {c.size}) non-degenerate',
            True, det.nonzero,
        )
        if not report.connected:
            b.note(f'class {c.id}: {report.component_count} components')
        scanned += 1
    b.check('real noncentral classes scanned', len(real), scanned)
    if not real:
        b.note(f'{spec}: no real noncentral classes')
    return b.build()


def verify_suzuki_order4(provider: GroupProvider, q: int = 8) -> Verdict:
    b = VerdictBuilder('suzuki-order4', q=q)
    bundle = provider.bundle(f'sz:{q}')
    T = bundle.table
    involutions = [c.id for c in T.classes if c.elt_order == 2]
    order4 = [c.id for c in T.classes if c.elt_order == 4]
    b.check('classes of order 4', 2, len(order4))
    b.check('classes of involutions', 1, len(involutions))
    if len(order4) != 2 or len(involutions) != 1:
        return b.build()
    y, x = order4[0], involutions[0]
    b.check('order-4 classes are mutually inverse', order4[1], T.inverse_class(y))
    b.check('order-4 class not real', False, is_real(T, y))
    for cid in order4:
        fn = _class_form(bundle, cid, provider)
        report = killing_graph_components(fn, provider.config, compare_commuting=False)
        b.check(f'class {cid} connected', True, report.connected)

    closed = suzuki_closed_forms(q)
    hist = class_product_histogram(T, y, y, provider.config)
    b.check('Phi(Y, Y, X)', closed['phi_yyx'], int(hist[x]))
    b.check('Phi(Y, Y, Y)', closed['phi_yyy'], int(hist[y]))
    b.check('Phi(Y, Y, Y^-1)', closed['phi_yyy'], int(hist[order4[1]]))
    fn = _class_form(bundle, y, provider)
    nonzero = nonzero_pair_count(fn, provider.config)
    same = same_sylow_pair_count(T, y, bundle.sylow(2))
    b.check('pairs with nonzero K', closed['nonzero_pairs'], nonzero)
    b.check('pairs in a common Sylow subgroup', closed['same_sylow_pairs'], same)
    b.check('cross-Sylow pairs with nonzero K', closed['cross_sylow_pairs'], nonzero - same)
    return b.build()


def verify_quotient_lifting(provider: GroupProvider, q: int) -> Verdict:
    b = VerdictBuilder('quotient-lifting', q=q)
    up = provider.bundle(f'sl2:{q}')
    down = provider.bundle(f'psl2:{q}')
    R = down.group.realization
    z = up.group.center().size

    def project(indices: np.ndarray) -> np.ndarray:
        return down.group.index_of(R.canonical(up.group.data[indices]))

    lifted = set()
    for c in up.table.classes:
        if c.is_central:
            continue
        images = np.unique(down.table.class_of[project(c.members)])
        if not b.check(f'class {c.id} maps onto one class', 1, images.size):
            continue
        target = int(images[0])
        lifted.add((target, c.elt_order))
        if down.table[target].is_central:
            continue
        up_graph = killing_graph_components(
            _class_form(up, c.id, provider), provider.config, compare_commuting=False
        )
        down_graph = killing_graph_components(
            _class_form(down, target, provider), provider.config, compare_commuting=False
        )
        b.check(
            f'class {c.id} -> {target}: connected upstairs implies connected downstairs',
            True, (not up_graph.connected) or down_graph.connected,
        )
    for c in down.table.classes:
        if c.is_central or math.gcd(c.elt_order, z) != 1:
            continue
        b.check(f'class {c.id} has a preimage of order {c.elt_order}', True,
                (c.id, c.elt_order) in lifted)
    return b.build()


def verify_product_graph(provider: GroupProvider, n: int = 5) -> Verdict:
    b = VerdictBuilder('product-graph', n=n)
    product = provider.bundle(f'symprod:{n}')
    factor = provider.bundle(f'sym:{n}')
    points = np.arange(2 * n)

    def both_cycles(x: int) -> bool:
        row = product.group.data[x]
        return bool((row != points).all())

    ids = [c.id for c in product.table.classes
           if c.elt_order == n and both_cycles(c.rep)]
    cycles = [c.id for c in factor.table.classes
              if c.elt_order == n and _fixed_points(factor, c.rep) == 0]
    if not (b.check('product class found', 1, len(ids))
            and b.check('factor class found', 1, len(cycles))):
        return b.build()
    pc, fc = product.table[ids[0]], factor.table[cycles[0]]
    b.check('product class size is |C1|^2', fc.size ** 2, pc.size)

    fn = _class_form(product, pc.id, provider)
    fn1 = _class_form(factor, fc.id, provider)
    G, H = product.group, factor.group
    rows = G.data[pc.members]
    left = H.index_of(rows[:, :n])
    right = H.index_of(rows[:, n:] - n)
    ab = fn.values_for_products(G.mul(pc.members[:, None], pc.members[None, :]))
    k1 = fn1.values_for_products(H.mul(left[:, None], left[None, :]))
    k2 = fn1.values_for_products(H.mul(right[:, None], right[None, :]))
    b.check('K factorises over the two copies', True, bool((ab == k1 * k2).all()))

    whole = killing_graph_components(fn, provider.config, compare_commuting=False)
    part = killing_graph_components(fn1, provider.config, compare_commuting=False)
    b.check('factor graph connected', True, part.connected)
    b.check('product graph connected iff factor graph connected',
            part.connected, whole.connected)
    return b.build()
