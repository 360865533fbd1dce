import itertools

import pytest

from complaff.algebra import PrimeField, Quaternions, scalars
from complaff.errors import InfiniteDomainError
from complaff.linalg import unit_vector, vec_add, vec_scale, vector
from complaff.projective import (
    Subspace,
    ZStructure,
    all_complements,
    hyperplanes,
    hyperplanes_not_containing,
    is_complement,
    standard_complement_rows,
)

GF2 = PrimeField(2)
GF3 = PrimeField(3)
Q = Quaternions()


def sub(domain, ambient, rows):
    return Subspace.from_rows(domain, ambient, rows)


def e(domain, n, i):
    return unit_vector(domain, n, i)


# ---------------------------------------------------------------------------
# oracle: enumerate every d-dimensional subspace by brute force
# ---------------------------------------------------------------------------

def brute_force_subspaces(domain, n, d):
    """All d-dim subspaces, from spans of all vector d-tuples (slow, independent)."""
    elems = scalars(domain)
    vectors = [v for v in itertools.product(elems, repeat=n)]
    found = set()
    for combo in itertools.combinations(vectors, d):
        s = Subspace.from_rows(domain, n, combo)
        if s.dim == d:
            found.add(s)
    return found


def gaussian_binomial(q, n, k):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


# ---------------------------------------------------------------------------
# lattice operations and complements
# ---------------------------------------------------------------------------

def test_complement_examples_gf2():
    w = sub(GF2, 4, [e(GF2, 4, 0), e(GF2, 4, 1)])
    s1 = sub(GF2, 4, [e(GF2, 4, 2), e(GF2, 4, 3)])
    s2 = sub(GF2, 4, [e(GF2, 4, 1), e(GF2, 4, 2)])
    s3 = sub(GF2, 4, [vec_add(e(GF2, 4, 0), e(GF2, 4, 2)), e(GF2, 4, 3)])
    assert is_complement(w, s1)
    assert not is_complement(w, s2)
    assert is_complement(w, s3)          # rank check done brutally below
    stacked = sub(GF2, 4, list(w.rows()) + list(s3.rows()))
    assert stacked.dim == 4


def test_lattice_sum_and_intersection():
    a = sub(GF3, 4, [e(GF3, 4, 0), e(GF3, 4, 1)])
    b = sub(GF3, 4, [e(GF3, 4, 1), e(GF3, 4, 2)])
    assert (a + b).dim == 3
    meet = a & b
    assert meet.dim == 1
    assert meet.contains_vector(e(GF3, 4, 1))
    modular = (a & b).dim + (a + b).dim
    assert modular == a.dim + b.dim


def test_all_complements_counts_against_brute_force():
    w = sub(GF2, 4, [e(GF2, 4, 0), e(GF2, 4, 1)])
    mine = all_complements(w)
    assert len(mine) == 16 and len(set(mine)) == 16
    oracle = {s for s in brute_force_subspaces(GF2, 4, 2) if is_complement(w, s)}
    assert set(mine) == oracle


def test_all_complements_gf3_count():
    w = sub(GF3, 4, [e(GF3, 4, 0), e(GF3, 4, 1)])
    mine = all_complements(w)
    assert len(mine) == 81 and len(set(mine)) == 81
    for s in mine[:10]:
        assert is_complement(w, s)


def test_all_complements_nonstandard_w():
    rows = [vec_add(e(GF2, 4, 0), e(GF2, 4, 2)), vec_add(e(GF2, 4, 1), e(GF2, 4, 3))]
    w = sub(GF2, 4, rows)
    comps = all_complements(w)
    assert len(set(comps)) == 16
    assert all(is_complement(w, s) for s in comps)
    b = standard_complement_rows(w)
    assert len(b) == 2


def test_all_complements_trivial_cases_refused():
    with pytest.raises(ValueError):
        all_complements(Subspace.full(GF2, 3))
    with pytest.raises(ValueError):
        all_complements(Subspace.zero(GF2, 3))


# ---------------------------------------------------------------------------
# hyperplanes
# ---------------------------------------------------------------------------

def test_hyperplane_counts():
    assert len(hyperplanes(GF2, 3)) == 7
    hs = hyperplanes(GF2, 4)
    assert len(hs) == 15
    assert len(set(hs)) == 15
    w = sub(GF2, 4, [e(GF2, 4, 0), e(GF2, 4, 1)])
    # forms vanishing on W: 2^2 - 1 = 3 of the 15 contain W
    assert len(hyperplanes_not_containing(w)) == 12


def test_hyperplane_count_formula():
    for q, domain in ((2, GF2), (3, GF3)):
        for n in (2, 3, 4):
            assert len(hyperplanes(domain, n)) == gaussian_binomial(q, n, n - 1)
            for h in hyperplanes(domain, n):
                assert h.dim == n - 1


def test_hyperplanes_n1():
    hs = hyperplanes(GF2, 1)
    assert len(hs) == 1 and hs[0].dim == 0


# ---------------------------------------------------------------------------
# Z-structure and central subspaces
# ---------------------------------------------------------------------------

def test_commutative_everything_central():
    z = ZStructure(GF3, [e(GF3, 4, 2), e(GF3, 4, 3)])
    for rows in ([e(GF3, 4, 2)], [vec_add(e(GF3, 4, 2), e(GF3, 4, 3))],
                 [e(GF3, 4, 2), e(GF3, 4, 3)]):
        a = sub(GF3, 4, rows)
        assert z.maximal_central_subspace(a) == a
        assert z.is_central_subspace(a)


def quaternion_zstructure(m=2):
    rows = [e(Q, m, i) for i in range(m)]
    return ZStructure(Q, rows)


def test_quaternion_maximal_central_trivial():
    z = quaternion_zstructure()
    # A = K*(i*b1 + b2): q*i and q both rational forces q = 0
    a = sub(Q, 2, [(Q.i, Q.one())])
    m = z.maximal_central_subspace(a)
    assert m.dim == 0
    assert not z.is_central_subspace(a)


def test_quaternion_maximal_central_full_line():
    z = quaternion_zstructure()
    a = sub(Q, 2, [(Q.one(), Q.zero())])
    assert z.maximal_central_subspace(a) == a
    # a scaled Z-line is still central: K*(i*b1) = K*b1
    a2 = sub(Q, 2, [(Q.i, Q.zero())])
    assert z.maximal_central_subspace(a2) == a2


def test_quaternion_maximal_central_mixed_plane():
    z = quaternion_zstructure()
    a = sub(Q, 2, [(Q.i, Q.one()), (Q.one(), Q.zero())])
    # A is all of K^2, whose maximal central subspace is K^2 itself
    assert a.dim == 2
    assert z.maximal_central_subspace(a) == a


def test_maximal_central_is_largest():
    z = quaternion_zstructure()
    a = sub(Q, 2, [(Q.i, Q.one())])
    m = z.maximal_central_subspace(a)
    # every central vector of A generates a central subspace inside M
    for coords in z.z_point_samples():
        if a.contains_vector(coords):
            assert m.contains_vector(coords)


def test_central_complement_properties():
    z = quaternion_zstructure()
    for rows in ([(Q.i, Q.one())], [(Q.one(), Q.zero())], []):
        a = sub(Q, 2, rows) if rows else Subspace.zero(Q, 2)
        c = z.central_complement(a)
        assert z.is_central_subspace(c)
        assert (a & c).dim == 0
        assert (a + c) == z.span


def test_central_complement_prefers_small_indices():
    z = quaternion_zstructure()
    a = sub(Q, 2, [(Q.i, Q.one())])   # does not contain b1
    c = z.central_complement(a)
    assert c == sub(Q, 2, [(Q.one(), Q.zero())])


def test_outside_reference_span_rejected():
    z = ZStructure(GF2, [e(GF2, 4, 2), e(GF2, 4, 3)])
    with pytest.raises(ValueError):
        z.maximal_central_subspace(sub(GF2, 4, [e(GF2, 4, 0)]))


def test_projective_z_membership():
    z = quaternion_zstructure()
    b1, b2 = e(Q, 2, 0), e(Q, 2, 1)
    assert z.point_in_projective_z(vec_add(b1, b2))
    assert z.point_in_projective_z(vec_scale(Q.i, vec_add(b1, b2)))   # K*(iv) = K*v
    assert not z.point_in_projective_z((Q.one(), Q.i))


def test_z_point_reps_finite_count():
    z = ZStructure(GF3, [e(GF3, 2, 0), e(GF3, 2, 1)])
    reps = z.z_point_reps()
    assert len(reps) == 4            # (3^2 - 1)/(3 - 1)
    with pytest.raises(InfiniteDomainError):
        quaternion_zstructure().z_point_reps()
    samples = quaternion_zstructure().z_point_samples()
    assert samples.is_sample and len(samples) > 4
