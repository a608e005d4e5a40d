"""
RunRecord Model Tests
"""

import pytest

from nichols.models import RunRecord
from tests.factories import FailedRunRecordFactory, RunRecordFactory


@pytest.mark.models
@pytest.mark.unit
class TestRunRecordModel:
    """Test suite for RunRecord."""

    def test_creation(self, db):
        """Test creating a record stores the manifest fields."""
        record = RunRecordFactory(command="yd census", seeds=[0, 1], engines=["modular"])
        assert record.pk is not None
        assert record.params == {"N": 1, "n": 1, "mu": 1, "lambda": 1}
        assert record.seeds == [0, 1]
        assert record.succeeded

    def test_str_uses_status_label(self, db):
        """Test __str__ shows the command and its exit status."""
        record = FailedRunRecordFactory(command="suzuki verify-hopf")
        assert str(record).startswith("suzuki verify-hopf (")
        assert not record.succeeded

    def test_same_output(self, db):
        """Test records compare by output digest."""
        first = RunRecordFactory(output_digest="ab" * 32)
        second = RunRecordFactory(output_digest="ab" * 32)
        third = RunRecordFactory(output_digest="cd" * 32)
        assert first.same_output_as(second)
        assert not first.same_output_as(third)

    def test_empty_digest_never_matches(self, db):
        """Test runs without output are never considered identical."""
        first = RunRecordFactory(output_digest="")
        second = RunRecordFactory(output_digest="")
        assert not first.same_output_as(second)

    def test_ordering_newest_first(self, db):
        """Test records are ordered by creation time, newest first."""
        RunRecordFactory.create_batch(3)
        stamps = list(RunRecord.objects.values_list("created_at", flat=True))
        assert stamps == sorted(stamps, reverse=True)
