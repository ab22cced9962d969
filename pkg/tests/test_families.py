"""Tree families and their closed forms against the brute-force oracle."""

from fractions import Fraction
from math import comb

import pytest

from bcprof import (
    OddMError,
    OutOfDomainError,
    OutOfRangeError,
    OutOfTabulatedRangeError,
    SearchCapExceededError,
    BadSpecError,
    closed_form_gij_pk,
    closed_form_gij_Pk,
    closed_form_gij_Pkv,
    closed_form_path_bck,
    closed_form_path_Pkv,
    counts_through_vertex,
    diameter,
    make_broom,
    make_double_broom,
    make_gij,
    make_path,
    make_tell,
    path_counts_naive,
    tabulated_gij_k_values,
)


class TestMakers:
    def test_path(self):
        t = make_path(5)
        assert t.n == 6 and diameter(t) == 5
        with pytest.raises(OutOfRangeError):
            make_path(0)

    def test_broom(self):
        t, center = make_broom(4, 3)
        assert t.n == 8 and t.degree(center) == 4
        assert diameter(t) == 5
        with pytest.raises(OutOfRangeError):
            make_broom(0, 3)

    def test_double_broom(self):
        t, middle = make_double_broom(4, 3)
        assert t.n == 11 and middle == 2
        assert diameter(t) == 6
        with pytest.raises(OddMError):
            make_double_broom(3, 3)

    def test_gij_size_and_diameter(self):
        for i, j in ((3, 5), (4, 6), (5, 7)):
            t, v = make_gij(i, j)
            assert v == 1
            assert t.n == i * (j + 1) + 3 + 2 * i * j
            assert diameter(t) == i * j + i + j - 1

    def test_gij_reference_instance(self):
        t, _ = make_gij(3, 5)
        assert t.n == 51
        assert path_counts_naive(t).p[2] == 58


class TestPathClosedForms:
    def test_reference_value(self):
        assert closed_form_path_bck(4, 2, 2) == Fraction(1, 3)

    def test_matches_oracle(self):
        for n in range(2, 26):
            table = path_counts_naive(make_path(n))
            for i in range(0, n // 2 + 1):
                for k in range(2, n + 1):
                    assert closed_form_path_Pkv(n, i, k) == table.Pkv[i][k]
                    assert closed_form_path_bck(n, i, k) == Fraction(
                        table.Pkv[i][k], table.Pk[k]
                    )

    def test_symmetry_covers_other_half(self):
        # vertex i and n-i are mirror images, so i <= n/2 loses nothing
        n = 9
        table = path_counts_naive(make_path(n))
        for i in range(0, n + 1):
            assert table.Pkv[i] == table.Pkv[n - i]

    def test_domain_errors(self):
        with pytest.raises(OutOfDomainError):
            closed_form_path_Pkv(10, 6, 4)  # i > n/2
        with pytest.raises(OutOfDomainError):
            closed_form_path_Pkv(10, 2, 11)  # k > n


class TestGijClosedForms:
    @pytest.mark.parametrize("i", (3, 4))
    @pytest.mark.parametrize("j", (5, 6, 7))
    def test_pk_rows_match_oracle(self, i, j):
        t, _ = make_gij(i, j)
        table = path_counts_naive(t)
        ks = tabulated_gij_k_values(i, j)
        assert ks == sorted(set(ks))
        for k in ks:
            assert closed_form_gij_pk(i, j, k) == table.p[k], (i, j, k)

    @pytest.mark.parametrize("i", (3, 4))
    @pytest.mark.parametrize("j", (5, 6, 7))
    def test_prefix_rows_match_oracle(self, i, j):
        t, v = make_gij(i, j)
        table = path_counts_naive(t)
        for r in range(2, i):
            ks = tuple(r * (j + 1) + off for off in (2, 3, 4))
            assert closed_form_gij_Pk(i, j, r) == tuple(table.Pk[k] for k in ks)
            assert closed_form_gij_Pkv(i, j, r) == tuple(table.Pkv[v][k] for k in ks)

    def test_untabulated_k_rejected(self):
        with pytest.raises(OutOfTabulatedRangeError):
            closed_form_gij_pk(3, 5, 200)

    def test_small_j_rejected(self):
        with pytest.raises(OutOfDomainError):
            closed_form_gij_pk(3, 4, 2)


def _prefix_counts(t, x, upto):
    counts = counts_through_vertex(t, x)
    acc, out = 0, [0, 0]
    for l in range(2, upto + 1):
        acc += counts[l] if l < len(counts) else 0
        out.append(acc)
    return out


class TestTell:
    def test_minimal_search_reference_counts(self):
        _, _, _, choice = make_tell(3)
        assert choice.a == (2, 4, 1)
        assert choice.b == (3, 2, 1)

    @pytest.mark.parametrize("l", (1, 2, 3))
    def test_alternation(self, l):
        t, u, v, _ = make_tell(l)
        d = diameter(t)
        Pu = _prefix_counts(t, u, d)
        Pv = _prefix_counts(t, v, d)
        for i in range(1, l):
            assert Pu[2 * i] > Pv[2 * i]
            assert Pv[2 * i + 1] > Pu[2 * i + 1]

    def test_u_v_distance(self):
        t, u, v, _ = make_tell(2)
        from bcprof import bfs_distances

        assert bfs_distances(t, u)[v] == 4

    def test_paper_bound_small(self):
        t, u, v, choice = make_tell(2, strategy="paper_bound")
        assert choice.strategy == "paper_bound"
        assert choice.a[0] == comb(3, 2)
        Pu = _prefix_counts(t, u, diameter(t))
        Pv = _prefix_counts(t, v, diameter(t))
        assert Pu[2] > Pv[2] and Pv[3] > Pu[3]

    def test_paper_bound_exceeds_cap(self):
        with pytest.raises(SearchCapExceededError):
            make_tell(3, strategy="paper_bound")

    def test_unknown_strategy(self):
        with pytest.raises(BadSpecError):
            make_tell(2, strategy="nope")

    def test_bad_l(self):
        with pytest.raises(OutOfRangeError):
            make_tell(0)
