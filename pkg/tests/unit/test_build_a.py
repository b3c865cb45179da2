"""Tests for the series construction of A"""

import pytest

from src.algebra.polyring import T, c, canonical, s
from src.morley.build_a import (
    ROTATION_MAPS,
    SeriesTerm,
    TrigFactor,
    a_terms,
    arg,
    build_A,
    build_reduced_A,
    build_series,
    reduce_coefficients,
    rotate_poly,
    sin_,
)


class TestTerms:
    """Test the term description of A"""

    def test_six_products(self):
        """Test A is a signed sum of six products"""
        terms = a_terms()
        assert len(terms) == 6
        assert sorted(abs(term.coefficient) for term in terms) == [1, 1, 1, 1, 2, 2]

    def test_factor_validation(self):
        """Test kind and power checks"""
        with pytest.raises(ValueError):
            TrigFactor("tan", arg(u=T(1)))
        with pytest.raises(ValueError):
            TrigFactor("sin", arg(u=T(1)), 0)

    def test_arg_phases(self):
        """Test phase multiples land in t-index order"""
        a = arg(u=1, v=1, k0=-1, phases={4: 1})
        assert a.m == (0, 0, 0, 1, 0, 0)
        assert a.k0 == -1

    def test_relabel(self):
        """Test relabelling moves t, s and c subscripts"""
        term = a_terms()[0].relabel(ROTATION_MAPS[1])
        assert len(term.factors) == len(a_terms()[0].factors)

    def test_rotate_poly(self):
        """Test t1 -> t3 -> t5 -> t1"""
        assert rotate_poly(T(1), 1) == T(3)
        assert rotate_poly(T(1), 2) == T(5)
        assert rotate_poly(s(2) * c(6), 1) == s(4) * c(2)
        assert rotate_poly(T(4), 0) == T(4)


class TestBuildSeries:
    """Test series construction"""

    def test_single_factor(self):
        """Test sin(t1 alpha)^2 starts at t1^2 alpha^2"""
        series = build_series([SeriesTerm(1, (sin_(arg(u=T(1)), 2),))], 4)
        assert series.coeff(2, 0) == T(1) ** 2
        assert not series.coeff(1, 0)

    def test_bad_arguments(self):
        """Test rotation and degree checks"""
        with pytest.raises(ValueError):
            build_A(3, 8)
        with pytest.raises(ValueError):
            build_A(0, 3)
        with pytest.raises(ValueError):
            build_reduced_A(2)

    @pytest.mark.slow
    def test_reduction_commutes(self):
        """Test reducing the coefficients equals building with reduced arguments"""
        reduced = build_reduced_A(4)
        from_full = reduce_coefficients(build_A(0, 4))
        for i, j in ((2, 2), (3, 1), (1, 3)):
            assert not canonical(reduced.coeff(i, j) - from_full.coeff(i, j))
