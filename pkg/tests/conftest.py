import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homext.groups import PermGroup, parse_permutation_list


def group_from(spec: str, degree: int) -> PermGroup:
    return PermGroup(parse_permutation_list(spec, degree), degree)


@pytest.fixture(scope="session")
def small_groups():
    """Named small groups used across suites."""
    return {
        "triv3": group_from("()", 3),
        "c2": group_from("(1 2)", 2),
        "c3": group_from("(1 2 3)", 3),
        "s3": group_from("(1 2),(1 2 3)", 3),
        "a3": group_from("(1 2 3)", 3),
        "s4": group_from("(1 2),(1 2 3 4)", 4),
        "a4": group_from("(1 2 3),(1 2 4)", 4),
        "v4": group_from("(1 2)(3 4),(1 3)(2 4)", 4),
        "d4": group_from("(1 2 3 4),(1 3)", 4),
        "c4": group_from("(1 2 3 4)", 4),
        "s5": group_from("(1 2),(1 2 3 4 5)", 5),
        "a5": group_from("(1 2 3),(1 2 3 4 5)", 5),
        "c6": group_from("(1 2 3 4 5 6)", 6),
        "s3xs2": group_from("(1 2),(1 2 3),(4 5)", 5),
    }
