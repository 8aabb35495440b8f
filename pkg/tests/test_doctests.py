"""Run the doctests embedded in the library modules."""

import doctest
import importlib

import pytest

MODULE_NAMES = [
    "balacyc.cyclotomic",
    "balacyc.intlinalg",
    "balacyc.groups",
    "balacyc.complexes",
    "balacyc.cyclo_family",
]


@pytest.mark.parametrize("name", MODULE_NAMES)
def test_module_doctests(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
    assert result.attempted > 0
