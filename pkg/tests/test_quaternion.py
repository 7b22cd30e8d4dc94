"""Quaternion scalar arithmetic and similarity."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quathw import Quaternion, ZeroQuaternionError, similar, standard_representative
from quathw.quaternion import I, J, K, ONE, isclose, similarity_witness

from oracles import table_mul

components = st.floats(min_value=-8.0, max_value=8.0, allow_nan=False)


def quaternions(nonzero=False):
    def build(a0, a1, a2, a3):
        return Quaternion(a0, a1, a2, a3)

    strat = st.builds(build, components, components, components, components)
    if nonzero:
        strat = strat.filter(lambda q: q.modulus() > 1e-3)
    return strat


class TestMultiplication:
    def test_basis_relations(self):
        minus_one = Quaternion(-1.0)
        assert I * I == minus_one
        assert J * J == minus_one
        assert K * K == minus_one
        assert I * J * K == minus_one

    def test_i_times_j_is_k(self):
        assert I * J == K

    def test_identity(self):
        q = Quaternion(1, 2, 3, 4)
        assert q * ONE == q
        assert ONE * q == q
        assert q * 1 == q

    def test_distributive_expansion(self):
        # (1+i)(1+j) expanded over the basis product table
        p = Quaternion(1, 1, 0, 0)
        q = Quaternion(1, 0, 1, 0)
        assert p * q == table_mul(p, q) == Quaternion(1, 1, 1, 1)

    def test_not_commutative(self):
        assert I * J != J * I
        assert I * J == -(J * I)

    @given(quaternions(), quaternions())
    def test_matches_basis_table(self, p, q):
        assert isclose(p * q, table_mul(p, q), tol=1e-10)

    @given(quaternions(), quaternions())
    def test_modulus_multiplicative_within_4_ulps(self, p, q):
        lhs = (p * q).modulus()
        rhs = p.modulus() * q.modulus()
        assert abs(lhs - rhs) <= 4 * math.ulp(max(lhs, rhs))

    @given(quaternions(nonzero=True), quaternions(nonzero=True))
    def test_modulus_multiplicative_relative(self, p, q):
        lhs = (p * q).modulus()
        rhs = p.modulus() * q.modulus()
        assert abs(lhs - rhs) <= 1e-12 * rhs

    @given(quaternions(), quaternions(), quaternions())
    @settings(max_examples=200)
    def test_associative(self, p, q, r):
        left = (p * q) * r
        right = p * (q * r)
        scale = 1.0 + p.modulus() * q.modulus() * r.modulus()
        assert isclose(left, right, tol=1e-10 * scale)

    @given(quaternions(), quaternions())
    def test_conjugation_antihomomorphism(self, p, q):
        assert isclose((p * q).conjugate(), q.conjugate() * p.conjugate(), tol=1e-10)

    @given(quaternions())
    def test_conjugate_involution_and_norm(self, q):
        assert q.conjugate().conjugate() == q
        prod = q * q.conjugate()
        assert isclose(prod, Quaternion(q.modulus_squared()), tol=1e-10 * (1 + q.modulus_squared()))


class TestInverse:
    def test_unit_imaginary(self):
        assert I.inverse() == -I

    def test_real(self):
        assert Quaternion.from_real(2.0).inverse() == Quaternion(0.5)

    def test_one_plus_ijk(self):
        q = Quaternion(1, 1, 1, 1)
        inv = q.inverse()
        assert isclose(inv, Quaternion(0.25, -0.25, -0.25, -0.25), tol=1e-15)
        assert isclose(q * inv, ONE, tol=1e-12)
        assert isclose(inv * q, ONE, tol=1e-12)

    @given(quaternions(nonzero=True))
    def test_two_sided(self, q):
        inv = q.inverse()
        assert isclose(q * inv, ONE, tol=1e-12)
        assert isclose(inv * q, ONE, tol=1e-12)

    def test_zero_raises(self):
        with pytest.raises(ZeroQuaternionError):
            Quaternion().inverse()

    def test_division(self):
        p = Quaternion(1, 2, 3, 4)
        q = Quaternion(0, 1, 1, 0)
        assert isclose((p / q) * q, p, tol=1e-12)
        assert isclose(p / 2.0, Quaternion(0.5, 1, 1.5, 2), tol=1e-15)


class TestSimilarity:
    def test_i_similar_j_with_witness(self):
        assert similar(I, J)
        r = I + J  # explicit witness: r^-1 * i * r = j
        assert isclose(r.inverse() * I * r, J, tol=1e-12)

    def test_self_similar(self):
        q = Quaternion(1, 2, 3, 4)
        assert similar(q, q)

    def test_conjugate_pair_with_witness(self):
        p = Quaternion(1, 1, 0, 0)   # 1+i
        q = Quaternion(1, -1, 0, 0)  # 1-i
        assert similar(p, q)
        assert isclose(J.inverse() * q * J, p, tol=1e-12)

    def test_dissimilar(self):
        assert not similar(I, ONE)
        assert not similar(Quaternion(1, 1, 0, 0), Quaternion(1, 2, 0, 0))

    @given(quaternions(), quaternions())
    def test_similar_implies_equal_modulus(self, p, q):
        if similar(p, q, tol=1e-12):
            assert abs(p.modulus() - q.modulus()) <= 1e-10 * (1 + p.modulus())

    @given(quaternions(nonzero=True), quaternions(nonzero=True))
    def test_conjugation_preserves_class(self, q, r):
        rotated = r.inverse() * q * r
        assert similar(q, rotated, tol=1e-8 * (1 + q.modulus()))


class TestStandardRepresentative:
    def test_reflection(self):
        assert standard_representative(Quaternion(1, -1, 0, 0)) == 1 + 1j

    def test_j_maps_to_i(self):
        assert standard_representative(J) == 1j

    def test_real_fixed_point(self):
        assert standard_representative(Quaternion.from_real(3.0)) == 3 + 0j

    @given(quaternions(nonzero=True))
    def test_representative_is_similar(self, q):
        z = standard_representative(q)
        rep = Quaternion.from_complex(z)
        assert similar(rep, q, tol=1e-10)
        assert z.imag >= 0.0

    @given(quaternions(nonzero=True))
    def test_witness_conjugates_to_representative(self, q):
        w = similarity_witness(q)
        target = Quaternion.from_complex(standard_representative(q))
        assert isclose(w.inverse() * q * w, target, tol=1e-8 * (1 + q.modulus()))


class TestDecomposition:
    def test_parts(self):
        q = Quaternion(1, 2, 3, 4)
        assert q.real_part == 1.0
        assert q.complex_part == 1 + 2j
        assert q.imaginary_part == Quaternion(0, 2, 3, 4)
        assert q.complex_pair() == (1 + 2j, 3 + 4j)

    def test_split_round_trip(self):
        q = Quaternion(1.5, -2.5, 3.25, -0.125)
        z1, z2 = q.complex_pair()
        assert Quaternion.from_complex_pair(z1, z2) == q

    def test_modulus_zero_iff_zero(self):
        assert Quaternion().modulus() == 0.0
        assert Quaternion(0, 0, 0, 1e-150).modulus() > 0.0
