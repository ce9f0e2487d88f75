# tests/test_functor_library.py
"""
Tests for functor extensionality over a fixed functor library.
"""

import pytest

from mereo_geometry.checker.functor_library import check_mereot16
from mereo_geometry.errors import ArityMismatch, NonemptyLibraryRequired
from mereo_geometry.mereology.functors import Functor


def test_default_library_on_two_atoms(two_atoms):
    report = check_mereot16(two_atoms)
    assert report.valid
    assert report.assignments == 7 * 3 * 8 * 8
    assert report.notes == ("library: pt, el, Kl, coll, ov, distinct, ext",)


def test_single_functor_library(two_atoms):
    assert check_mereot16(two_atoms, [Functor.DISTINCT]).valid


def test_empty_library(two_atoms):
    with pytest.raises(NonemptyLibraryRequired):
        check_mereot16(two_atoms, [])


def test_binary_functor_rejected(two_atoms):
    with pytest.raises(ArityMismatch):
        check_mereot16(two_atoms, [Functor.UNION])
