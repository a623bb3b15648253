"""Shared random generators and independent oracles.

Oracles here deliberately avoid the code paths they are used to check:
the rightmost-anchored derivative recursion only uses apply(), the
commutative-evaluation check only uses scalar arithmetic, and the grid
intersection enumerates small coefficient combinations directly.
"""

from fractions import Fraction

from nccalc import (
    CommRule,
    FamilyParams,
    MatrixPoly,
    NCPoly,
    QQ,
    Subspace,
    all_words,
    invert_matrix,
)


def rand_fraction(rng, lo=-4, hi=4, nonzero=False):
    while True:
        c = Fraction(rng.randint(lo, hi))
        if not nonzero or c != 0:
            return c


def rand_scalar(rng, field=QQ, lo=-4, hi=4, nonzero=False):
    while True:
        c = field.of(rng.randint(lo, hi))
        if not nonzero or c != 0:
            return c


def random_poly(rng, n, max_deg, field=QQ, min_deg=0, homogeneous=None):
    """Random polynomial with small integer coefficients."""
    p = NCPoly.zero(n, field)
    for _ in range(rng.randint(1, 4)):
        if homogeneous is None:
            length = rng.randint(min_deg, max_deg)
        else:
            length = homogeneous
        w = tuple(rng.randint(1, n) for _ in range(length))
        p = p + NCPoly.from_word(n, w, field, coeff=rand_scalar(rng, field, nonzero=True))
    return p


def random_homogeneous_rule(rng, n, field=QQ):
    """Rule whose images have homogeneous degree-1 entries (some zero)."""
    images = []
    for _ in range(n):
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                if rng.random() < 0.45:
                    row.append(NCPoly.zero(n, field))
                else:
                    row.append(random_poly(rng, n, 1, field, homogeneous=1))
            rows.append(row)
        images.append(MatrixPoly(rows))
    return CommRule(images)


def random_any_rule(rng, n, field=QQ):
    """Rule with arbitrary low-degree entries, usually non-homogeneous."""
    images = []
    for _ in range(n):
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                if rng.random() < 0.5:
                    row.append(NCPoly.zero(n, field))
                else:
                    row.append(random_poly(rng, n, 2, field))
            rows.append(row)
        images.append(MatrixPoly(rows))
    return CommRule(images)


def random_invertible(rng, n, field=QQ):
    while True:
        a = [[rand_scalar(rng, field, -3, 3) for _ in range(n)] for _ in range(n)]
        if invert_matrix(a, field) is not None:
            return a


def random_q_grid(rng, n, field=QQ):
    """Valid diagonal-rule grid: q[i][j]*q[j][i] = 1 off the diagonal."""
    one = field.of(1)
    q = [[one for _ in range(n)] for _ in range(n)]
    for i in range(n):
        q[i][i] = rand_scalar(rng, field, -4, 4, nonzero=True)
    for i in range(n):
        for j in range(i + 1, n):
            q[i][j] = rand_scalar(rng, field, -4, 4, nonzero=True)
            q[j][i] = one / q[i][j]
    return q


def random_family_params(rng, family, swapped=None):
    """Small-integer parameter draw for a two-generator family."""
    if swapped is None:
        swapped = rng.random() < 0.5
    pair = lambda: (rng.randint(-3, 3), rng.randint(-3, 3))
    if family == "I":
        return FamilyParams("I", swapped=swapped, u=pair(), v=pair(), w=pair(),
                            lam=rng.randint(-3, 3))
    if family == "II":
        return FamilyParams("II", swapped=swapped, v=pair(), v1=pair(),
                            lam=rng.randint(-3, 3), mu=rng.randint(-3, 3))
    if family == "III":
        return FamilyParams("III", swapped=swapped, u=pair(), v=pair())
    if family == "IV":
        return FamilyParams("IV", swapped=swapped, u=pair(), v=pair(), w=pair())
    raise ValueError(family)


def params_match(a, b):
    """Same family, swap state, and filled slots, ignoring unconstrained ones."""
    if a.family != b.family or a.swapped != b.swapped:
        return False
    skip = a.unconstrained | b.unconstrained
    for slot in ("u", "v", "w", "v1", "lam", "mu"):
        if slot in skip:
            continue
        av, bv = getattr(a, slot), getattr(b, slot)
        if av is None or bv is None:
            if av is not bv:
                return False
            continue
        if slot in ("lam", "mu"):
            if Fraction(av) != Fraction(bv):
                return False
        elif tuple(Fraction(t) for t in av) != tuple(Fraction(t) for t in bv):
            return False
    return True


def partial_rightmost(rule, k, f):
    """Derivative via the rightmost-letter identity; apply() is the only
    rule-dependent ingredient, so this is independent of the leftmost
    recursion used by the implementation."""
    total = NCPoly.zero(rule.n, rule.field)
    for w, c in f.terms.items():
        total = total + c * _word_partial_rightmost(rule, k, w)
    return total


def _word_partial_rightmost(rule, k, w):
    n, field = rule.n, rule.field
    if len(w) == 0:
        return NCPoly.zero(n, field)
    if len(w) == 1:
        return NCPoly.one(n, field) if w[0] == k else NCPoly.zero(n, field)
    head = NCPoly.from_word(n, w[:-1], field)
    i = w[-1]
    rec = _word_partial_rightmost(rule, k, w[:-1]) * NCPoly.gen(n, i, field)
    return rec + rule.apply(head).entry(k, i)


def eval_commutative(p, point):
    """Evaluate at commuting scalar coordinates (the abelianized value)."""
    total = p.field.of(0)
    for w, c in p.terms.items():
        v = c
        for letter in w:
            v = v * point[letter - 1]
        total = total + v
    return total


def commutes_by_grid_evaluation(rule):
    """Check abelianized image commutators by exhaustive grid evaluation.

    Entries have per-variable degree at most 2, so vanishing on the grid
    {0,1,2}^n certifies the abelianization is zero.
    """
    n, field = rule.n, rule.field
    grid = [field.of(t) for t in range(3)]
    points = [[]]
    for _ in range(n):
        points = [pt + [g] for pt in points for g in grid]
    for a in range(n):
        for b in range(a + 1, n):
            comm = rule.images[a] * rule.images[b] - rule.images[b] * rule.images[a]
            for k in range(1, n + 1):
                for i in range(1, n + 1):
                    e = comm.entry(k, i)
                    for pt in points:
                        if eval_commutative(e, pt) != field.of(0):
                            return False
    return True


def orbit_stays_inside(rule, start, space):
    """Close start under all image-entry maps; report whether the closure
    stabilizes without leaving the given subspace."""
    n = rule.n
    cur = Subspace.span([start], space.degree, n=n, field=rule.field)
    for _ in range(space.ambient_dim + 1):
        if not space.contains_subspace(cur):
            return False
        fresh = []
        for b in cur.basis_polys():
            m = rule.apply(b)
            for k in range(1, n + 1):
                for i in range(1, n + 1):
                    e = m.entry(k, i)
                    if not cur.contains(e):
                        fresh.append(e)
        if not fresh:
            return True
        cur = Subspace.span(list(cur.basis_polys()) + fresh,
                            space.degree, n=n, field=rule.field)
    return True


def grid_intersection(sub1, sub2, coeffs=range(-2, 3)):
    """Brute-force intersection: enumerate small combinations of sub1's
    basis and keep those lying in sub2."""
    basis = sub1.basis_polys()
    found = []
    combos = [[]]
    for _ in basis:
        combos = [c + [Fraction(t)] for c in combos for t in coeffs]
    for combo in combos:
        v = NCPoly.zero(sub1.n, sub1.field)
        for c, b in zip(combo, basis):
            v = v + c * b
        if sub2.contains(v):
            found.append(v)
    return Subspace.span(found, sub1.degree, n=sub1.n, field=sub1.field)
