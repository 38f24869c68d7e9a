# Copyright (C) 2024 Nice Zombies
"""Effective algebra test utils."""
from __future__ import annotations

__all__: list[str] = [
    "get_dyadic", "get_integers", "get_rationals", "group_value",
]

from typing import TYPE_CHECKING

import pytest

from effalg import DivisibilityType, cyclotomic_field, rank1_from_type

if TYPE_CHECKING:
    from fractions import Fraction

    from effalg import AlgebraicFieldDiagram, SubgroupDiagram


def group_value(group: SubgroupDiagram, code: int | None) -> Fraction:
    """Get the rational with a code in a rank-1 group."""
    assert code is not None
    return group.value_of(code)[0]


@pytest.fixture(name="integers")
def get_integers() -> SubgroupDiagram:
    """Get the integers."""
    return rank1_from_type(DivisibilityType.parse(""))


@pytest.fixture(name="dyadic")
def get_dyadic() -> SubgroupDiagram:
    """Get the dyadic rationals."""
    return rank1_from_type(DivisibilityType.parse("2:inf"))


@pytest.fixture(name="rationals")
def get_rationals() -> AlgebraicFieldDiagram:
    """Get the rationals as a field diagram."""
    return cyclotomic_field(1)
