import random
from itertools import combinations

import pytest

from prmcodes.codes import (
    ev_vector,
    prm_generator_matrix,
    projective_points,
    support,
    weight,
)
from prmcodes.combinat import p_k
from prmcodes.errors import GuardExceeded
from prmcodes.gf import GF
from prmcodes.minwt import (
    MinWtWitness,
    TSDecomp,
    canonical_min_poly,
    count_report,
    enumerate_witness_codewords,
    max_zero_bound,
    prm_min_distance,
    prm_min_weight_count,
    prm_min_weight_count_alt,
    prm_witness_poly,
    random_prm_witness,
    rm_min_distance,
    rm_min_weight_count,
    rm_witness_poly,
    support_fiber_check,
    tau_bijection_check,
    ts_decompose,
)
from prmcodes.oracle import brute_min_weight_words
from prmcodes.poly import Poly, reduced_monomials_projective

F2, F3, F4, F5 = GF(2), GF(3), GF(2, 2), GF(5)


# -- (t, s) decomposition --------------------------------------------------------


def test_ts_decompose():
    assert ts_decompose(1, 2, "prm") == TSDecomp(0, 0)
    assert ts_decompose(4, 3, "prm") == TSDecomp(1, 1)
    assert ts_decompose(3, 2, "prm") == TSDecomp(2, 0)
    assert ts_decompose(0, 5, "rm") == TSDecomp(0, 0)
    assert ts_decompose(5, 4, "rm") == TSDecomp(1, 2)
    with pytest.raises(ValueError):
        ts_decompose(0, 3, "prm")
    with pytest.raises(ValueError):
        ts_decompose(-1, 3, "rm")
    with pytest.raises(ValueError):
        ts_decompose(2, 3, "other")


# -- distances --------------------------------------------------------------------


def test_prm_min_distance_values():
    assert prm_min_distance(2, 1, 2) == 4
    assert prm_min_distance(2, 2, 2) == 2
    assert prm_min_distance(2, 3, 2) == 1
    assert prm_min_distance(3, 2, 2) == 6
    assert prm_min_distance(3, 4, 2) == 2
    with pytest.raises(ValueError):
        prm_min_distance(2, 4, 2)


def test_rm_min_distance_values():
    assert rm_min_distance(2, 1, 2) == 2
    assert rm_min_distance(2, 0, 2) == 4          # q^m at order 0
    assert rm_min_distance(3, 2, 2) == 3          # t=1, s=0: 3 * 3^0
    assert rm_min_distance(3, 4, 2) == 1
    with pytest.raises(ValueError):
        rm_min_distance(2, 3, 2)


def test_max_zero_bound():
    assert max_zero_bound(2, 2, 2) == 5
    assert max_zero_bound(3, 2, 2) == 7
    # at and beyond the full-space order the ceiling term is 1
    for q, m in [(2, 2), (3, 2), (2, 3)]:
        for d in range(m * (q - 1) + 1, m * (q - 1) + 5):
            assert max_zero_bound(q, d, m) == p_k(q, m) - 1


# -- witness polynomials ------------------------------------------------------------


def test_canonical_poly_weights():
    cases = [
        (F2, 1, 2, ()),        # hyperplane complement, weight 4
        (F2, 2, 2, ()),
        (F3, 2, 2, (0,)),      # X0 * X1, weight 6
        (F3, 4, 2, (0,)),
        (F5, 3, 2, (0, 2)),
    ]
    for F, d, m, omegas in cases:
        G = canonical_min_poly(F, d, m, omegas)
        assert G.is_homogeneous(d)
        cw = ev_vector(G, projective_points(F, m))
        assert weight(cw) == prm_min_distance(F.q, d, m), (F.q, d, m)


def test_canonical_poly_simple_forms():
    from prmcodes.poly import parse_poly

    assert canonical_min_poly(F2, 1, 2) == parse_poly("X0", F2, 3)
    assert canonical_min_poly(F3, 2, 2, (0,)) == parse_poly("X0*X1", F3, 3)
    # q=2, d=2: X1*(X0 + X1)
    assert canonical_min_poly(F2, 2, 2) == parse_poly("X0*X1 + X1^2", F2, 3)


def test_canonical_poly_validation():
    with pytest.raises(ValueError):
        canonical_min_poly(F3, 2, 2)                 # s=1 needs one omega
    with pytest.raises(ValueError):
        canonical_min_poly(F5, 3, 2, (1, 1))         # duplicates


def test_identity_witness_matches_canonical_up_to_sign():
    # the two published product shapes differ by (-1)^t
    for F, d, m, omegas in [(F2, 2, 2, ()), (F3, 2, 2, (1,)), (F3, 4, 2, (0, )), (F3, 3, 2, ())]:
        ts = ts_decompose(d, F.q, "prm")
        nforms = ts.t + 1 if ts.s == 0 else ts.t + 2
        forms = tuple(
            tuple(1 if j == i else 0 for j in range(m + 1)) for i in range(nforms)
        )
        w = MinWtWitness("prm", forms, tuple(omegas))
        Q = prm_witness_poly(w, F, d, m)
        G = canonical_min_poly(F, d, m, omegas)
        sign = F.pow(F.neg(1), ts.t)
        assert Q == G.scale(sign)


def test_prm_witness_validation():
    with pytest.raises(ValueError, match="independent"):
        prm_witness_poly(
            MinWtWitness("prm", ((1, 0, 0), (1, 0, 0))), F2, 2, 2
        )
    with pytest.raises(ValueError, match="forms"):
        prm_witness_poly(MinWtWitness("prm", ((1, 0, 0),)), F2, 2, 2)
    with pytest.raises(ValueError, match="distinct"):
        # q=5, d=3: t=0, s=2, two forms and two omegas required
        prm_witness_poly(
            MinWtWitness("prm", ((1, 0, 0), (0, 1, 0)), (1, 1)), F5, 3, 2
        )
    with pytest.raises(ValueError, match="kind"):
        prm_witness_poly(MinWtWitness("rm", ((1, 0, 0),)), F2, 1, 2)


def test_random_prm_witnesses_hit_min_distance():
    rng = random.Random(42)
    cases = [(F2, 2), (F3, 2), (F4, 2), (F5, 2), (F2, 3), (F3, 3)]
    checked = 0
    for F, m in cases:
        pts = projective_points(F, m)
        for d in range(1, m * (F.q - 1) + 2):
            for _ in range(6):
                w = random_prm_witness(F, d, m, rng)
                f = prm_witness_poly(w, F, d, m)
                assert f.is_homogeneous(d)
                cw = ev_vector(f, pts)
                assert weight(cw) == prm_min_distance(F.q, d, m), (F.q, d, m, w)
                checked += 1
    assert checked >= 200


def test_rm_witness_poly():
    # q=2, nu=1, m=2, l_1 = X0: f = 1 + X0, weight 2
    w = MinWtWitness("rm", ((1, 0, 0),), omega0=1)
    f = rm_witness_poly(w, F2, 1, 2)
    from prmcodes.poly import parse_poly

    assert f == parse_poly("1 + X0", F2, 2)
    from prmcodes.codes import affine_points

    cw = ev_vector(f, affine_points(F2, 2))
    assert weight(cw) == 2


def test_rm_witness_random_weights():
    rng = random.Random(9)
    from prmcodes.codes import affine_points

    for F, m in [(F2, 2), (F3, 2), (F2, 3), (F4, 2)]:
        pts = affine_points(F, m)
        for nu in range(0, m * (F.q - 1) + 1):
            ts = ts_decompose(nu, F.q, "rm")
            need = ts.t if ts.s == 0 else ts.t + 1
            for _ in range(5):
                forms = []
                while len(forms) < need:
                    c = tuple(rng.randrange(F.q) for _ in range(m + 1))
                    if not any(c[:m]):
                        continue
                    from prmcodes import linalg

                    if linalg.is_independent(F, [f[:m] for f in forms] + [c[:m]]):
                        forms.append(c)
                omega0 = rng.randrange(1, F.q)
                omegas = tuple(sorted(rng.sample(range(F.q), ts.s)))
                w = MinWtWitness("rm", tuple(forms), omegas, omega0)
                f = rm_witness_poly(w, F, nu, m)
                cw = ev_vector(f, pts)
                assert weight(cw) == rm_min_distance(F.q, nu, m), (F.q, nu, m, w)


def test_rm_witness_validation():
    with pytest.raises(ValueError, match="nonzero"):
        rm_witness_poly(MinWtWitness("rm", ((1, 0, 0),), omega0=0), F2, 1, 2)
    with pytest.raises(ValueError, match="degree"):
        rm_witness_poly(MinWtWitness("rm", ((0, 0, 1),), omega0=1), F2, 1, 2)
    with pytest.raises(ValueError, match="independent"):
        # degree-1 parts coincide even though the affine forms differ
        rm_witness_poly(
            MinWtWitness("rm", ((1, 0, 0), (1, 0, 1)), omega0=1), F2, 2, 2
        )


# -- counts ------------------------------------------------------------------------


def test_count_values():
    assert prm_min_weight_count(2, 1, 2) == 7
    assert prm_min_weight_count(2, 2, 2) == 21
    assert prm_min_weight_count(2, 3, 2) == 7
    assert prm_min_weight_count(3, 2, 2) == 156
    assert prm_min_weight_count(3, 3, 2) == 104
    assert rm_min_weight_count(2, 1, 2) == 6
    assert rm_min_weight_count(2, 2, 2) == 4
    assert rm_min_weight_count(3, 0, 2) == 2


def test_alt_count_agrees():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for m in (1, 2, 3):
            for d in range(1, m * (q - 1) + 2):
                assert prm_min_weight_count_alt(q, d, m) == prm_min_weight_count(
                    q, d, m
                ), (q, d, m)


def test_count_report_with_oracle():
    rep = count_report(F3, 2, 2, with_oracle=True)
    assert rep.formula_count == rep.alt_count == rep.brute_count == 156
    assert rep.agree
    assert rep.as_dict()["brute_count"] == "156"


# -- witness enumeration --------------------------------------------------------------


@pytest.mark.parametrize(
    "F,d,m,expected",
    [(F2, 1, 2, 7), (F2, 2, 2, 21), (F3, 2, 2, 156), (F2, 3, 2, 7)],
    ids=str,
)
def test_enumerate_witness_codewords_counts(F, d, m, expected):
    cws = enumerate_witness_codewords(F, d, m)
    assert len(cws) == expected == prm_min_weight_count(F.q, d, m)
    dist = prm_min_distance(F.q, d, m)
    assert all(weight(c) == dist for c in cws)


def test_enumerate_equals_oracle_set():
    for F, d, m in [(F2, 2, 2), (F3, 2, 2), (F3, 3, 2), (F2, 2, 3)]:
        wit = enumerate_witness_codewords(F, d, m)
        assert wit == brute_min_weight_words(prm_generator_matrix(F, d, m))


def test_enumerate_guard():
    with pytest.raises(GuardExceeded):
        enumerate_witness_codewords(F3, 3, 2, guard=100)


# -- support structure ------------------------------------------------------------------


def test_equal_support_means_scalar_multiple():
    # exhaustive at q=3, d=2, m=2: the 156 minimum-weight words fall into
    # 78 support classes, each a scalar orbit of size q-1
    words = brute_min_weight_words(prm_generator_matrix(F3, 2, 2))
    by_support = {}
    for w in words:
        by_support.setdefault(frozenset(support(w)), []).append(w)
    assert len(by_support) == 78
    for group in by_support.values():
        assert len(group) == 2
        a, b = group
        lam = next(F3.mul(y, F3.inv(x)) for x, y in zip(a, b) if x)
        assert lam != 0
        assert all(F3.mul(lam, x) == y for x, y in zip(a, b))


def _dot(F, u, v):
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def test_bound_achievers_zero_sets_are_hyperplane_unions():
    # every minimum-weight codeword's zero set is a union of at most d
    # distinct hyperplanes (exhaustive over the oracle sets)
    for F, m, dmax in [(F2, 2, 2), (F3, 2, 3)]:
        pts = projective_points(F, m).points
        hyperplanes = [
            frozenset(i for i, p in enumerate(pts) if _dot(F, normal, p) == 0)
            for normal in pts
        ]
        for d in range(1, dmax + 1):
            words = brute_min_weight_words(prm_generator_matrix(F, d, m))
            for w in words:
                zero = frozenset(i for i, x in enumerate(w) if x == 0)
                inside = [h for h in hyperplanes if h <= zero]
                union = frozenset().union(*inside) if inside else frozenset()
                assert union == zero
                assert any(
                    frozenset().union(*combo) == zero
                    for r in range(1, min(d, len(inside)) + 1)
                    for combo in combinations(inside, r)
                )


def test_random_reduced_polys_respect_zero_set_bound():
    rng = random.Random(17)
    for F, m in [(F2, 2), (F3, 2), (F4, 2)]:
        n = p_k(F.q, m)
        pts = projective_points(F, m)
        for d in range(1, m * (F.q - 1) + 2):
            basis = reduced_monomials_projective(F.q, d, m)
            bound = max_zero_bound(F.q, d, m)
            for _ in range(40):
                terms = {
                    e: rng.randrange(1, F.q)
                    for e in rng.sample(basis, rng.randrange(1, len(basis) + 1))
                }
                f = Poly(F, m + 1, terms)
                if f.is_zero():
                    continue
                zeros = n - weight(ev_vector(f, pts))
                assert zeros <= bound, (F.q, d, m, f)


# -- incidence checks ----------------------------------------------------------------------


def test_fiber_check_frozen_values():
    rep = support_fiber_check(F3, 2, 2)
    assert rep.j_size == rep.j_expected == 1872
    assert rep.fiber_sizes == (24,)
    assert rep.fiber_expected == 24
    assert rep.support_count == 78
    assert rep.implied_count == rep.formula_count == 156
    assert rep.ok
    assert rep.as_dict()["ok"] is True


def test_fiber_check_more_cases():
    rep = support_fiber_check(F4, 2, 2)     # t=0, s=1 over GF(4)
    assert rep.ok
    rep = support_fiber_check(F3, 4, 2)     # t=1, s=1
    assert rep.ok


def test_fiber_check_rejects_s_zero():
    with pytest.raises(ValueError, match="tau"):
        support_fiber_check(F2, 2, 2)


def test_tau_check_frozen_values():
    rep = tau_bijection_check(F2, 2, 2)
    assert rep.pair_count == rep.pair_expected == 21
    assert rep.injective
    assert rep.implied_count == rep.formula_count == 21
    assert rep.ok
    rep3 = tau_bijection_check(F3, 3, 2)
    assert rep3.pair_count == 52 and rep3.implied_count == 104 and rep3.ok


def test_tau_check_rejects_wrong_shape():
    with pytest.raises(ValueError, match="fiber"):
        tau_bijection_check(F3, 2, 2)       # s != 0
    with pytest.raises(ValueError, match="simplex"):
        tau_bijection_check(F3, 1, 2)       # t = 0
    with pytest.raises(GuardExceeded):
        tau_bijection_check(F2, 2, 2, guard=5)
