"""Run every docstring example in the package."""

import doctest

import pytest

import permpat.families
import permpat.grassmann
import permpat.matching
import permpat.patterns
import permpat.perms
import permpat.schubert
import permpat.translate
import permpat.verify

MODULES = [
    permpat.perms,
    permpat.patterns,
    permpat.matching,
    permpat.translate,
    permpat.schubert,
    permpat.grassmann,
    permpat.families,
    permpat.verify,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_docstring_examples(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
