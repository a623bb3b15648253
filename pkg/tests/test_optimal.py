import random
from fractions import Fraction

import pytest

from nccalc import (
    GF,
    QQ,
    CommRule,
    MatrixPoly,
    NCPoly,
    NonHomogeneousRuleError,
    Subspace,
    builtin,
    check_consistent_ideal,
    check_same_degree_consistency,
    compute_U,
    ideal_component,
    is_regular,
    largest_invariant,
    optimal_ideal,
    partial,
    quotient_dims,
)
from helpers import (
    orbit_stays_inside,
    random_family_params,
    random_homogeneous_rule,
    random_invertible,
    random_poly,
)
from nccalc import FamilyParams, build_family


def x(n, *letters):
    return NCPoly.from_word(n, tuple(letters))


def strict_fixpoint_rule():
    """The invariant-subspace loop must shrink twice before stabilizing."""
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    zero = NCPoly.zero(2)
    a1 = MatrixPoly([[-x1, -x2], [zero, zero]])
    a2 = MatrixPoly([[zero, zero], [-x1, x1 - x2]])
    return CommRule([a1, a2])


def test_compute_u_fixtures():
    zero1 = Subspace.zero(2, 1, QQ)
    assert compute_U(builtin("ex3.2-zero", n=2), 2, zero1).dim == 0
    assert compute_U(builtin("ex3.3-minus", n=2), 2, zero1).dim == 4
    u = compute_U(builtin("ex3.4", alphas=[1]), 2, zero1)
    expect = Subspace.span([x(2, 1, 2), x(2, 2, 1), x(2, 2, 2)], 2, n=2, field=QQ)
    assert u.equal(expect)


def test_largest_invariant_fixtures():
    r = builtin("ex3.4", alphas=[1])
    zero2 = Subspace.zero(2, 2, QQ)
    full2 = Subspace.full(2, 2, QQ)
    assert largest_invariant(r, zero2).dim == 0
    assert largest_invariant(r, full2).equal(full2)
    u = Subspace.span([x(2, 1, 2), x(2, 2, 1), x(2, 2, 2)], 2, n=2, field=QQ)
    assert largest_invariant(r, u).equal(u)


def test_largest_invariant_strict_shrink():
    r = strict_fixpoint_rule()
    u = compute_U(r, 2, Subspace.zero(2, 1, QQ))
    assert u.dim == 3
    core = largest_invariant(r, u)
    assert core.dim == 0
    # any nonzero start inside u must be driven out by the entry maps
    for start in u.basis_polys():
        assert not orbit_stays_inside(r, start, u)


def test_optimal_ideal_fixtures():
    assert [c.dim for c in optimal_ideal(builtin("ex3.2-zero", n=2), 6).components] == [0] * 6
    dims3 = [c.dim for c in optimal_ideal(builtin("ex3.3-minus", n=2), 4).components]
    assert dims3 == [0, 4, 8, 16]
    dims5 = [c.dim for c in optimal_ideal(builtin("ex3.5", mu=1, lam=1), 5).components]
    assert dims5 == [0, 2, 6, 14, 30]


def test_quotient_dims_fixtures():
    filt = optimal_ideal(builtin("ex3.2-zero", n=2), 4)
    assert quotient_dims(filt) == [(1, 2), (2, 4), (3, 8), (4, 16)]
    filt = optimal_ideal(builtin("ex3.1-diag", q=[[3, 2], [Fraction(1, 2), 3]]), 5)
    assert quotient_dims(filt) == [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
    filt = optimal_ideal(builtin("ex3.4", alphas=[1]), 5)
    assert quotient_dims(filt) == [(1, 2), (2, 1), (3, 1), (4, 1), (5, 1)]
    assert filt.quotient_dims() == quotient_dims(filt)


def test_quantum_plane_dims_three_generators():
    q = [[2, 3, 5], [Fraction(1, 3), 2, 7], [Fraction(1, 5), Fraction(1, 7), 2]]
    filt = optimal_ideal(builtin("ex3.1-diag", q=q), 4)
    # commutative-size quotient: binomial(s+2, 2)
    assert [d for _, d in quotient_dims(filt)] == [3, 6, 10, 15]


def test_nilpotent_diag_quotient():
    r = builtin("ex3.1-diag", q=[[-1, 2], [Fraction(1, 2), -1]])
    filt = optimal_ideal(r, 5)
    assert [d for _, d in quotient_dims(filt)] == [2, 1, 0, 0, 0]
    I2 = filt.component(2)
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    assert I2.contains(x1 * x1)
    assert I2.contains(x2 * x2)
    assert I2.contains(2 * (x1 * x2) - x2 * x1)


def test_ideal_filtration_api():
    filt = optimal_ideal(builtin("ex3.5", mu=1, lam=1), 3)
    assert filt.component(1).dim == 0
    assert filt.component(2).dim == 2
    with pytest.raises(ValueError):
        filt.component(0)
    with pytest.raises(ValueError):
        filt.component(4)


def test_defining_invariants_hold():
    rng = random.Random(50)
    rules = [
        builtin("ex3.4", alphas=[1]),
        builtin("ex3.5", mu=2, lam=3),
        builtin("ex3.1-diag", q=[[-1, 2], [Fraction(1, 2), -1]]),
        strict_fixpoint_rule(),
        random_homogeneous_rule(rng, 2),
    ]
    for r in rules:
        filt = optimal_ideal(r, 4)
        comps = filt.components
        assert comps[0].dim == 0
        for s in range(2, 5):
            I_s, I_prev = comps[s - 1], comps[s - 2]
            for b in I_s.basis_polys():
                # derivatives drop into the previous component
                for k in range(1, 3):
                    assert I_prev.contains(partial(r, k, b))
                # image entries stay inside
                m = r.apply(b)
                for k in (1, 2):
                    for i in (1, 2):
                        assert I_s.contains(m.entry(k, i))
            # two-sided ideal property, re-verified at the polynomial level
            for b in I_prev.basis_polys():
                for i in (1, 2):
                    g = NCPoly.gen(2, i)
                    assert I_s.contains(g * b)
                    assert I_s.contains(b * g)


def test_maximality_probe():
    # vectors of U_s outside I_s must escape U_s under the entry maps
    rng = random.Random(51)
    checked = 0
    rules = [strict_fixpoint_rule()] + [random_homogeneous_rule(rng, 2) for _ in range(20)]
    for r in rules:
        filt = optimal_ideal(r, 3)
        prev = Subspace.zero(2, 1, QQ)
        for s in (2, 3):
            u = compute_U(r, s, prev)
            I_s = filt.component(s)
            if u.dim > I_s.dim:
                for b in u.basis_polys():
                    if I_s.contains(b):
                        continue
                    assert not orbit_stays_inside(r, b, u)
                    checked += 1
            prev = I_s
    assert checked > 0


def test_span_oracle_equality():
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    r = builtin("ex3.1-diag", q=[[3, 2], [Fraction(1, 2), 3]])
    filt = optimal_ideal(r, 5)
    gen = 2 * (x1 * x2) - x2 * x1
    for s in range(2, 6):
        assert filt.component(s).equal(ideal_component([gen], s, n=2, field=QQ))
    r35 = builtin("ex3.5", mu=1, lam=1)
    filt35 = optimal_ideal(r35, 5)
    for s in range(2, 6):
        assert filt35.component(s).equal(
            ideal_component([x1 * x2, x2 * x1], s, n=2, field=QQ))


def test_ideal_component_fixtures():
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    g = 2 * (x1 * x2) - x2 * x1
    assert ideal_component([g], 3, n=2, field=QQ).dim == 4
    assert ideal_component([g], 1, n=2, field=QQ).dim == 0
    words2 = [x(2, 1, 1), x(2, 1, 2), x(2, 2, 1), x(2, 2, 2)]
    assert ideal_component(words2, 2, n=2, field=QQ).dim == 4
    assert ideal_component([], 3, n=2, field=QQ).dim == 0
    with pytest.raises(ValueError):
        ideal_component([x1 + x1 * x2], 3, n=2, field=QQ)
    with pytest.raises(ValueError):
        ideal_component([NCPoly.one(2)], 2, n=2, field=QQ)


def test_non_homogeneous_rule_rejected():
    x1 = NCPoly.gen(2, 1)
    zero = NCPoly.zero(2)
    bad = CommRule([MatrixPoly([[NCPoly.one(2), zero], [zero, zero]]),
                    MatrixPoly([[zero, zero], [zero, x1]])])
    with pytest.raises(NonHomogeneousRuleError):
        optimal_ideal(bad, 3)
    assert issubclass(NonHomogeneousRuleError, ValueError)


def test_same_degree_consistency_fixtures():
    rng = random.Random(52)
    # braided commutators of the diagonal rule are consistent
    for n in (2, 3):
        q = [[Fraction(1) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            q[i][i] = Fraction(rng.randint(1, 4))
        for i in range(n):
            for j in range(i + 1, n):
                q[i][j] = Fraction(rng.randint(1, 4))
                q[j][i] = 1 / q[i][j]
        r = builtin("ex3.1-diag", q=q)
        rels = []
        xs = [NCPoly.gen(n, t) for t in range(1, n + 1)]
        for l in range(n):
            for j in range(l + 1, n):
                rels.append(q[l][j] * (xs[l] * xs[j]) - xs[j] * xs[l])
        rep = check_same_degree_consistency(r, rels)
        assert rep.verdict is True
        assert rep.mode == "same-degree"
        assert not rep.violations
    # the commutator is consistent for every family draw
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    comm = x1 * x2 - x2 * x1
    for _ in range(5):
        fam = build_family(random_family_params(rng, "I"))
        assert check_same_degree_consistency(fam, [comm]).verdict is True
    # zero rule: D_1(x1x2) = x2 does not vanish
    bad = check_same_degree_consistency(builtin("ex3.2-zero", n=2), [x1 * x2])
    assert bad.verdict is False
    assert any(v.check == "partial" for v in bad.violations)


def test_same_degree_rejects_mixed_degrees():
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    r = builtin("ex3.2-zero", n=2)
    with pytest.raises(ValueError):
        check_same_degree_consistency(r, [x1 * x2, x1 * x2 * x1])
    with pytest.raises(ValueError):
        check_same_degree_consistency(r, [x1 + x1 * x2])


def test_degree_bounded_consistency_fixtures():
    x1, x2 = NCPoly.gen(2, 1), NCPoly.gen(2, 2)
    r35 = builtin("ex3.5", mu=1, lam=1)
    rep = check_consistent_ideal(r35, [x1 * x2, x2 * x1], 5)
    assert rep.verdict is True
    assert rep.mode == "degree-bounded"
    assert rep.checked_degree == 5
    r34 = builtin("ex3.4", alphas=[1])
    gens34 = [x1 * x2, x2 * x1, x2 * x2]
    assert check_consistent_ideal(r34, gens34, 5).verdict is True
    rz = builtin("ex3.2-zero", n=2)
    bad = check_consistent_ideal(rz, [x1], 3)
    assert bad.verdict is False


def test_is_regular_fixtures():
    classical = build_family(FamilyParams("III", u=(1, 0), v=(0, 1)))
    assert is_regular(classical)
    assert not is_regular(builtin("ex3.5", mu=1, lam=1))
    assert not is_regular(builtin("ex3.3-minus", n=2))
    assert not is_regular(builtin("ex3.2-zero", n=2))


def test_dims_stable_under_change_of_basis():
    rng = random.Random(54)
    pool = [
        builtin("ex3.5", mu=1, lam=1),
        builtin("ex3.4", alphas=[1]),
        builtin("ex3.1-diag", q=[[-1, 2], [Fraction(1, 2), -1]]),
    ]
    for r in pool:
        base = [c.dim for c in optimal_ideal(r, 4).components]
        for _ in range(3):
            alpha = random_invertible(rng, 2)
            moved = r.change_basis(alpha)
            assert [c.dim for c in optimal_ideal(moved, 4).components] == base


def test_prime_field_agrees_on_dims():
    F = GF(10007)
    q_f = [[F.of(-1), F.of(2)], [F.of(1) / F.of(2), F.of(-1)]]
    filt_f = optimal_ideal(builtin("ex3.1-diag", field=F, q=q_f), 4)
    filt_q = optimal_ideal(builtin("ex3.1-diag", q=[[-1, 2], [Fraction(1, 2), -1]]), 4)
    assert [c.dim for c in filt_f.components] == [c.dim for c in filt_q.components]
