"""Class functions on wreath products, pullbacks and the Fock algebra."""

import json
from fractions import Fraction

from ._wreathfock import (
    ClassFunction,
    Error,
    FockAlgebra,
    Group,
    InputError,
    ResourceError,
    catalog,
    colored_partition_series,
    default_max_order,
    direct_product,
    group_from_json,
    inner_product,
    type_of,
    wreath_centralizer_order,
    wreath_num_classes,
)
from . import _wreathfock as _core

__all__ = [
    "ClassFunction",
    "Error",
    "FockAlgebra",
    "Group",
    "InputError",
    "ResourceError",
    "catalog",
    "check_closed",
    "colored_partition_series",
    "default_max_order",
    "direct_product",
    "fractions",
    "group_classes",
    "group_from_json",
    "inner_product",
    "kunneth",
    "golden_examples",
    "series",
    "type_of",
    "verify_iso",
    "wreath_centralizer_order",
    "wreath_classes",
    "wreath_num_classes",
]


def fractions(values):
    """Convert "p/q" strings (as in ClassFunction.values) to Fractions."""
    return [Fraction(v) for v in values]


def group_classes(group):
    return json.loads(group.classes_json())


def wreath_classes(group, n):
    return json.loads(_core.wreath_classes_json(group, n))


def verify_iso(scenario_path):
    return json.loads(_core.verify_iso_json(str(scenario_path)))


def check_closed(scenario_path):
    return json.loads(_core.check_closed_json(str(scenario_path)))


def kunneth(g, h, max_level=3):
    return json.loads(_core.kunneth_json(g, h, max_level))


def series(group, max_n=6):
    return json.loads(_core.series_json(group, max_n))


def golden_examples():
    return json.loads(_core.golden_examples_json())
