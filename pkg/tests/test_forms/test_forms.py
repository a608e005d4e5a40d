"""
Form Tests

Validation of the parameter, family index and engine option forms the
management commands run their arguments through.
"""

import pytest

from algebra.forms import SuzukiParamsForm
from algebra.suzuki import SuzukiParams
from nichols.forms import EngineOptionsForm, FamilyIndicesForm


@pytest.mark.forms
@pytest.mark.unit
class TestSuzukiParamsForm:
    """Test SuzukiParamsForm validation."""

    def test_valid_data_builds_params(self):
        """Test form builds SuzukiParams from signs."""
        form = SuzukiParamsForm(data={"N": 2, "n": 1, "mu": "-", "lam": "+"})
        assert form.is_valid()
        params = form.cleaned_data["params"]
        assert (params.N, params.n, params.mu, params.lam) == (2, 1, -1, 1)

    @pytest.mark.parametrize("field", ["N", "n"])
    def test_positive_parameters(self, field):
        """Test N and n must be at least 1."""
        data = {"N": 1, "n": 1, "mu": "+", "lam": "+"}
        data[field] = 0
        form = SuzukiParamsForm(data=data)
        assert not form.is_valid()
        assert field in form.errors

    def test_sign_choices(self):
        """Test signs other than + and - are rejected."""
        form = SuzukiParamsForm(data={"N": 1, "n": 1, "mu": "1", "lam": "+"})
        assert not form.is_valid()
        assert "mu" in form.errors


@pytest.mark.forms
@pytest.mark.unit
class TestFamilyIndicesForm:
    """Test FamilyIndicesForm validation."""

    def test_normalizes_indices(self, small_params):
        """Test indices come back in family order as ints."""
        form = FamilyIndicesForm(data={"family": "B", "s": 1, "k": 0, "j": 1, "i": 0}, params=small_params)
        assert form.is_valid(), form.errors
        assert list(form.cleaned_data["indices"]) == ["i", "j", "k", "s"]
        assert form.cleaned_data["lax"] is False

    def test_rejects_foreign_indices(self, small_params):
        """Test indices the family does not use are rejected."""
        form = FamilyIndicesForm(data={"family": "I", "p": 0, "j": 2, "k": 0, "s": 1, "t": 0}, params=small_params)
        assert not form.is_valid()
        assert "t" in form.non_field_errors()[0]

    def test_rejects_out_of_range(self, small_params):
        """Test out-of-range indices are rejected when params are known."""
        form = FamilyIndicesForm(data={"family": "A", "i": 0, "j": 0, "k": 0, "p": 0, "s": 2}, params=small_params)
        assert not form.is_valid()

    def test_without_params(self):
        """Test raw indices pass through when no params are given."""
        form = FamilyIndicesForm(data={"family": "A", "i": 0, "j": 0, "k": 0, "p": 0, "s": 7})
        assert form.is_valid()
        assert form.cleaned_data["indices"]["s"] == 7

    def test_unknown_family(self):
        """Test family must be one of the listed tags."""
        form = FamilyIndicesForm(data={"family": "Z"}, params=SuzukiParams(1, 1))
        assert not form.is_valid()
        assert "family" in form.errors


@pytest.mark.forms
@pytest.mark.unit
class TestEngineOptionsForm:
    """Test EngineOptionsForm validation and defaults."""

    def test_exact_defaults(self):
        """Test exact engine defaults to one prime, seed 0 and sketch size 64."""
        form = EngineOptionsForm(data={"kmax": 4, "engine": "exact"})
        assert form.is_valid()
        assert (form.cleaned_data["seed"], form.cleaned_data["primes"]) == (0, 1)
        assert form.cleaned_data["sketch"] == []
        assert form.cleaned_data["sketch_size"] == 64

    def test_modular_defaults_to_two_primes(self):
        """Test modular engine confirms with two primes by default."""
        form = EngineOptionsForm(data={"kmax": 4, "engine": "modular"})
        assert form.is_valid()
        assert form.cleaned_data["primes"] == 2

    def test_sketch_degrees(self):
        """Test sketch degrees are parsed, deduplicated and sorted."""
        form = EngineOptionsForm(data={"kmax": 4, "engine": "modular", "sketch": "4, 2,4"})
        assert form.is_valid()
        assert form.cleaned_data["sketch"] == [2, 4]

    @pytest.mark.parametrize(
        "data",
        [
            {"kmax": 4, "engine": "exact", "primes": 2},
            {"kmax": 4, "engine": "exact", "sketch": "1"},
            {"kmax": 4, "engine": "exact", "sketch": "a"},
            {"kmax": -1, "engine": "exact"},
            {"kmax": 4, "engine": "modular", "primes": 5},
            {"kmax": 4, "engine": "float"},
        ],
    )
    def test_invalid_options(self, data):
        """Test invalid option combinations are rejected."""
        assert not EngineOptionsForm(data=data).is_valid()
