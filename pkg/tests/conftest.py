"""
Pytest Configuration and Shared Fixtures for nichols-forge Tests

This module provides reusable fixtures: small parameter sets, hand-built
braidings and helpers for running the management commands.
"""

import os

import django
from django.conf import settings

# Ensure Django settings are configured before importing models
if not settings.configured:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings.test")
    django.setup()

import pytest

from algebra.cyclotomic import CycScalar, root_of_unity
from algebra.suzuki import SuzukiParams
from nichols.braided import QMatrix, diagonal_braiding, make_vabe

# ============================================================================
# Parameter Fixtures
# ============================================================================


@pytest.fixture
def smallest_params():
    """A_{1,2}^{++}, the 8-dimensional algebra."""
    return SuzukiParams(1, 1)


@pytest.fixture
def small_params():
    """A_{1,4}^{++}, the 16-dimensional algebra."""
    return SuzukiParams(1, 2)


@pytest.fixture
def twisted_params():
    """A_{1,4}^{+-}: lambda = -1 switches on the odd V'_jk modules."""
    return SuzukiParams(1, 2, 1, -1)


@pytest.fixture
def dihedral_params():
    """N = 1, n = 2, mu = lambda = 1: the 64-dimensional Nichols algebras live here."""
    return SuzukiParams(1, 2)


# ============================================================================
# Braiding Fixtures
# ============================================================================


@pytest.fixture
def minus_one():
    """-1 as a cyclotomic scalar."""
    return CycScalar.rational(-1)


@pytest.fixture
def a1xa1_braiding(minus_one):
    """Diagonal braiding with vertices -1 and a trivial edge."""
    one = CycScalar.one()
    return diagonal_braiding(QMatrix([[minus_one, one], [one, minus_one]]))


@pytest.fixture
def a2_braiding():
    """Cartan type A2 at a primitive cube root of unity."""
    q = root_of_unity(3, 1)
    return diagonal_braiding(QMatrix([[q, q**2], [CycScalar.one(), q]]))


@pytest.fixture
def rank_one_g4():
    """One-dimensional braiding with q a primitive fourth root of unity."""
    return diagonal_braiding(QMatrix([[root_of_unity(4, 1)]]))


@pytest.fixture
def vabe_m_squared():
    """V_abe with ae = 1 and b of order 3."""
    return make_vabe(root_of_unity(3, 1), root_of_unity(3, 1), root_of_unity(3, 2))


@pytest.fixture
def vabe_four_m():
    """V_abe with b = -1 and ae of order 3."""
    return make_vabe(root_of_unity(3, 1), CycScalar.rational(-1), CycScalar.one())


# ============================================================================
# Settings Fixtures
# ============================================================================


@pytest.fixture
def record_runs(settings, db):
    """Turn run recording on for one test."""
    settings.FORGE_RECORD_RUNS = True
    return settings
