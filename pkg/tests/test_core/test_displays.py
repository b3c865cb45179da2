"""Tests for the display catalog"""

import pytest

from src.algebra.elimination import RatFunc
from src.algebra.polyring import T, canonical, permute_indices
from src.morley.context import SYSTEM_PERMUTATIONS
from src.morley.displays import DisplayCatalog, Factored, Relation, default_catalog


class TestDisplayCatalog:
    """Test lookup, typed access and fault injection"""

    def test_shared_default(self):
        """Test the default catalog is built once"""
        assert default_catalog() is default_catalog()
        assert "Eeq1" in default_catalog()
        assert len(default_catalog()) > 80

    def test_unknown_name(self):
        """Test a missing entry"""
        with pytest.raises(KeyError):
            default_catalog()["Eeq8"]

    def test_typed_access(self):
        """Test each accessor refuses the wrong kind of entry"""
        d = default_catalog()
        assert isinstance(d.ratfunc("S3"), RatFunc)
        assert isinstance(d.relation("S3_step1"), Relation)
        assert isinstance(d.factored("R_q1_q5_t5"), Factored)
        assert len(d.chain("S5eq1right1")) == 5
        with pytest.raises(ValueError):
            d.poly("S3")
        with pytest.raises(ValueError):
            d.relation("P")
        with pytest.raises(ValueError):
            d.factored("Eeq1")
        with pytest.raises(ValueError):
            d.chain("S3")

    def test_read_only(self):
        """Test the mapping cannot be assigned to"""
        with pytest.raises(TypeError):
            default_catalog()["Eeq1"] = T(1)  # type: ignore[index]

    def test_with_override(self):
        """Test a copy with one entry replaced"""
        d = default_catalog()
        changed = d.with_override("Eeq1", T(1))
        assert changed.poly("Eeq1") == T(1)
        assert d.poly("Eeq1") != T(1)
        with pytest.raises(KeyError):
            d.with_override("nope", T(1))

    def test_corrupted(self):
        """Test the leading term of the entry changes sign"""
        d = default_catalog()
        original = d.poly("Eeq1")
        flipped = d.corrupted("Eeq1").poly("Eeq1")
        monom, coeff = original.terms()[0]
        diff = original - flipped
        assert len(diff) == 1
        assert diff.terms()[0] == (monom, 2 * coeff)

    def test_corrupt_non_polynomial(self):
        """Test only polynomial entries can be corrupted"""
        with pytest.raises(ValueError):
            default_catalog().corrupted("S3")

    def test_custom_entries(self):
        """Test a catalog built from explicit entries"""
        d = DisplayCatalog({"x": T(1)})
        assert list(d) == ["x"]


class TestSystemDisplays:
    """Test the six displayed equations are index permutations of each other"""

    @pytest.mark.parametrize("name", ["Eeq2", "Eeq3", "Eeq4", "Eeq5", "Eeq6"])
    def test_permutation(self, name):
        """Test Eeq_k is Eeq1 with relabelled subscripts"""
        d = default_catalog()
        permuted = permute_indices(d.poly("Eeq1"), SYSTEM_PERMUTATIONS[name])
        assert not canonical(permuted - d.poly(name))
