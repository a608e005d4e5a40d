"""
Model Tests Package

Tests for the RunRecord model that stores command manifests.
"""
