from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affineclasses.partitions import (
    IDENTITIES,
    MINUS,
    OSignedPartition,
    PLUS,
    Partition,
    SpSignedPartition,
    b_stat,
    d_stat,
    enum_o_signed,
    enum_partitions,
    enum_sp_signed,
    lemma_rhs,
    lemma_sum,
    o_gl,
    o_gu,
    o_orth,
    o_sp,
    sp_f,
)
from affineclasses.series import Q, QPoly


def as_qpoly(x):
    return QPoly(0) + x


class TestEnumeration:
    def test_partition_counts(self):
        # 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
        assert [len(enum_partitions(n)) for n in range(11)] == [
            1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_partition_order_deterministic(self):
        assert [p.parts() for p in enum_partitions(4)] == [
            [4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]

    def test_partition_from_parts_list(self):
        assert Partition([2, 1, 1]) == Partition({2: 1, 1: 2})
        assert Partition([3, 3]).size == 6

    def test_partition_validation(self):
        with pytest.raises(ValueError):
            Partition({0: 1})
        with pytest.raises(ValueError):
            Partition({2: 0})

    def test_sp_signed_small(self):
        assert len(enum_sp_signed(0)) == 1
        assert len(enum_sp_signed(2)) == 3
        got = enum_sp_signed(2)
        assert got[0] == SpSignedPartition({2: 1}, {2: PLUS})
        assert got[1] == SpSignedPartition({2: 1}, {2: MINUS})
        assert got[2] == SpSignedPartition({1: 2}, {})

    def test_sp_signed_counts_match_series(self):
        rhs = lemma_rhs("genfun-1", 16)
        for n in range(8):
            assert len(enum_sp_signed(2 * n)) == rhs.coeff(n)

    def test_sp_signed_rejects_odd_total(self):
        with pytest.raises(ValueError):
            enum_sp_signed(3)

    def test_sp_signed_validation(self):
        with pytest.raises(ValueError):
            SpSignedPartition({1: 1, 2: 1}, {2: PLUS})  # odd size, odd mult
        with pytest.raises(ValueError):
            SpSignedPartition({2: 1}, {})  # missing sign
        with pytest.raises(ValueError):
            SpSignedPartition({2: 1}, {2: "x"})

    def test_o_signed_small(self):
        assert len(enum_o_signed(0)) == 1
        assert len(enum_o_signed(1)) == 2
        got = enum_o_signed(1)
        assert got[0] == OSignedPartition({1: 1}, {1: PLUS})
        assert got[1] == OSignedPartition({1: 1}, {1: MINUS})

    def test_o_signed_counts_match_series(self):
        rhs = lemma_rhs("genfunO-1", 16)
        for n in range(12):
            assert len(enum_o_signed(n)) == rhs.coeff(n)

    def test_o_signed_validation(self):
        with pytest.raises(ValueError):
            OSignedPartition({2: 1}, {})  # even size, odd mult
        with pytest.raises(ValueError):
            OSignedPartition({1: 1}, {})  # missing sign

    def test_sign_order_largest_size_first(self):
        # two signed sizes: the larger one flips slower, '+' before '-'
        got = [l.signs for l in enum_sp_signed(6) if l.mult == {4: 1, 2: 1}]
        assert got == [
            {4: PLUS, 2: PLUS}, {4: PLUS, 2: MINUS},
            {4: MINUS, 2: PLUS}, {4: MINUS, 2: MINUS}]


class TestStats:
    def test_d_and_b(self):
        lam = Partition([3, 2, 2, 1])
        assert d_stat(lam) == 3
        assert b_stat(lam) == 2
        assert d_stat(Partition({})) == 0
        assert b_stat(Partition({})) == 0

    def test_o_gl(self):
        assert o_gl(Partition({})) == 1
        assert o_gl(Partition([2, 1])) == 3

    def test_o_gu_numeric_and_symbolic(self):
        lam = Partition([2, 1])
        assert o_gu(lam, 3) == 1 + 3 * 2 - 2
        assert as_qpoly(o_gu(lam, Q)) == 2 * Q - 1
        assert o_gu(Partition({}), 5) == 1

    def test_sp_f_table(self):
        assert sp_f(2, 3, PLUS, 5) == 5
        assert sp_f(2, 3, MINUS, 5) == 5
        assert sp_f(2, 2, PLUS, 5) == 5
        assert sp_f(2, 2, MINUS, 5) == 4
        assert sp_f(2, 1, PLUS, 5) == 2
        assert sp_f(2, 1, MINUS, 5) == 2
        assert as_qpoly(sp_f(2, 1, PLUS, Q)) == (Q - 1) / 2

    def test_sp_f_rejects_even_q(self):
        with pytest.raises(ValueError):
            sp_f(2, 1, PLUS, 4)

    def test_o_sp(self):
        # [2^2, 1^2] with sign on size 2
        lam = SpSignedPartition({2: 2, 1: 2}, {2: PLUS})
        assert o_sp(lam, 3) == 1 + 1 + 3
        lam = SpSignedPartition({2: 2, 1: 2}, {2: MINUS})
        assert o_sp(lam, 3) == 1 + 1 + 2
        lam = SpSignedPartition({2: 1}, {2: PLUS})
        assert o_sp(lam, 5) == 1 + 2
        assert o_sp(SpSignedPartition({}, {}), 3) == 1

    def test_o_orth(self):
        lam = OSignedPartition({3: 1, 2: 2}, {3: MINUS})
        assert o_orth(lam, 3) == 1 + 1 + 1
        lam = OSignedPartition({1: 1}, {1: PLUS})
        assert o_orth(lam, 7) == 1 + 3
        assert o_orth(OSignedPartition({}, {}), 3) == 1


class TestIdentities:
    @pytest.mark.parametrize("identity", IDENTITIES)
    def test_lemma_sum_matches_rhs(self, identity):
        # plain partitions are cheap; signed ones grow faster
        n_max = 14 if identity.startswith("genfunU") or identity == "distinct" else 9
        lhs = lemma_sum(identity, n_max)
        rhs = lemma_rhs(identity, n_max)
        for n in range(n_max + 1):
            assert as_qpoly(lhs[n]) == as_qpoly(rhs.coeff(n)), (identity, n)

    def test_distinct_small_values(self):
        assert lemma_sum("distinct", 3) == [1, 2, 4, 7]

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            lemma_sum("nope", 3)
        with pytest.raises(ValueError):
            lemma_rhs("nope")

    def test_symbolic_specialize_matches_numeric(self):
        # the two symbolic identities, evaluated at odd q, agree with
        # running the whole sum numerically at that q
        from affineclasses.partitions import _f_sum  # noqa: PLC2701

        for q0 in (3, 5):
            sym = lemma_sum("genfun-3", 5)
            for n in range(6):
                num = sum(_f_sum(l, 0, q0) for l in enum_sp_signed(2 * n))
                assert as_qpoly(sym[n])(q0) == num

    def test_orbit_sums_assemble_from_identities(self):
        # sum of o_sp over signed partitions = genfun-1 + genfun-2 + genfun-3
        for n in range(6):
            total = 0
            for lam in enum_sp_signed(2 * n):
                total = total + o_sp(lam, Q)
            parts = (lemma_sum("genfun-1", n)[n] + lemma_sum("genfun-2", n)[n]
                     + lemma_sum("genfun-3", n)[n])
            assert as_qpoly(total) == as_qpoly(parts)

    def test_orbit_sums_assemble_orthogonal(self):
        for n in range(7):
            total = 0
            for lam in enum_o_signed(n):
                total = total + o_orth(lam, Q)
            parts = (lemma_sum("genfunO-1", n)[n] + lemma_sum("genfunO-2", n)[n]
                     + lemma_sum("genfunO-3", n)[n])
            assert as_qpoly(total) == as_qpoly(parts)

    def test_gu_orbit_sum_assembles(self):
        # sum of o_gu = genfunU-1 + q*genfunU-2 - genfunU-3
        for n in range(9):
            total = QPoly(0)
            for lam in enum_partitions(n):
                total = total + o_gu(lam, Q)
            parts = (lemma_sum("genfunU-1", n)[n]
                     + Q * lemma_sum("genfunU-2", n)[n]
                     - lemma_sum("genfunU-3", n)[n])
            assert total == as_qpoly(parts)


@given(st.integers(min_value=0, max_value=12))
@settings(max_examples=30, deadline=None)
def test_partition_sizes_and_order(n):
    seen = set()
    prev_largest = None
    for lam in enum_partitions(n):
        assert lam.size == n
        assert lam not in seen
        seen.add(lam)
        largest = max(lam.mult) if lam.mult else 0
        if prev_largest is not None:
            assert largest <= prev_largest
        prev_largest = largest


@given(st.integers(min_value=0, max_value=6))
@settings(max_examples=20, deadline=None)
def test_sp_signed_constraints(n):
    for lam in enum_sp_signed(2 * n):
        assert lam.size == 2 * n
        for i, a in lam.mult.items():
            if i % 2 == 1:
                assert a % 2 == 0
        assert set(lam.signs) == {i for i in lam.mult if i % 2 == 0}


@given(st.integers(min_value=0, max_value=9))
@settings(max_examples=20, deadline=None)
def test_o_signed_constraints(n):
    for lam in enum_o_signed(n):
        assert lam.size == n
        for i, a in lam.mult.items():
            if i % 2 == 0:
                assert a % 2 == 0
        assert set(lam.signs) == {i for i in lam.mult if i % 2 == 1}


@given(st.integers(min_value=0, max_value=7), st.sampled_from([3, 5, 7, 9]))
@settings(max_examples=40, deadline=None)
def test_o_sp_positive_integer(n, q):
    for lam in enum_sp_signed(2 * n):
        v = o_sp(lam, q)
        assert isinstance(v, int) and v >= 1
