"""
Pytest configuration and fixtures for the Lyndon parity toolkit tests.
"""

import sys
from pathlib import Path
from typing import Dict, List, Tuple

import pytest


# Add project paths to sys.path
PROJECT_ROOT = Path(__file__).parent.parent

sys.path.insert(0, str(PROJECT_ROOT))

from src.config import get_config  # noqa: E402
from src.words.core import parse_word  # noqa: E402


def w(text: str):
    """Shorthand: textual word to a tuple of ranks."""
    return parse_word(text)


@pytest.fixture
def psi_golden_rows() -> Dict[str, List[Tuple[str, str, str]]]:
    """
    Worked Psi traces: (O, rule, E) rows with bars between Lyndon factors
    and "!" between the two halves of a standard factorization.
    """
    return {
        "dadccdbccc": [
            ("d|adccd!bccc", "", "-"),
            ("d|ad!ccd", "(S)", "bccc"),
            ("d|c!cd", "(P)", "adbccc"),
            ("d|c", "(S)", "cdadbccc"),
            ("-", "(F)", "cdcdadbccc"),
        ],
        "babacabc": [
            ("b|abac!abc", "", "-"),
            ("b|a!bc", "(P)", "abac"),
            ("-", "(F)", "abcbabac"),
        ],
        "ddecedbdbdccdabda": [
            ("dde|ced|bdbdccd|abd|a", "", "-"),
            ("dde|ced|bd!bdccd", "(F)", "aabd"),
            ("dde|ced|bd!ccd", "(P)", "bdaabd"),
            ("dde|ced|c!cd", "(P)", "bdbdaabd"),
            ("dde|ced|c", "(S)", "cdbdbdaabd"),
            ("d!de", "(F)", "ccedcdbdbdaabd"),
            ("d", "(S)", "deccedcdbdbdaabd"),
            ("-", "(Insert1)", "de|d|ccedcd|bd|bd|aabd"),
        ],
        "bbccbbcccbbccbcbaabaabcaabaaabb": [
            ("bbccbbcccbbccbc|b|aabaabc|aab|a!aabb", "", "-"),
            ("bbccbbcccbbccbc|b|aab!aabc", "(F)", "aaabbaab"),
            ("bbccbbcccbbccbc|b|a!ab", "(S)", "aabcaaabbaab"),
            ("bbccbbcccbbccbc|b|a", "(S)", "abaabcaaabbaab"),
            ("bbccbbccc!bbccbc", "(F)", "ababaabcaaabbaab"),
            ("bbcc!bbccc", "(S)", "bbccbcababaabcaaabbaab"),
            ("b!bccc", "(P)", "bbccbbccbcababaabcaaabbaab"),
            ("b", "(S)", "bcccbbccbbccbcababaabcaaabbaab"),
            ("-", "(Insert1)", "bccc|bbccbbccbc|b|ab|ab|aabc|aaabbaab"),
        ],
    }


@pytest.fixture
def psi_golden_results() -> Dict[str, str]:
    return {
        "dadccdbccc": "cdcdadbccc",
        "babacabc": "abcbabac",
        "ddecedbdbdccdabda": "dedccedcdbdbdaabd",
        "bbccbbcccbbccbcbaabaabcaabaaabb": "bcccbbccbbccbcbababaabcaaabbaab",
    }


@pytest.fixture
def omega_golden_rows() -> Dict[str, List[Tuple[str, str, str]]]:
    """Worked Omega traces as (O', rule, E') rows; "!" marks the ISF of e'_1."""
    return {
        "cdcdadbccc": [
            ("-", "", "c!d|cd|adbccc"),
            ("d|c", "(F')", "cd|adbccc"),
            ("d|ccd", "(S')", "a!d!bccc"),
            ("d|adccd", "(P')", "bccc"),
            ("d|adccdbccc", "(S')", "-"),
        ],
        "dedccedcdbdbdaabd": [
            ("-", "", "de|d|ccedcd|bd|bd|aabd"),
            ("d", "(Extract1)", "de|ccedcd|bd|bd|aabd"),
            ("dde", "(S')", "c!ced!cd|bd|bd|aabd"),
            ("dde|ced|c", "(F')", "cd|bd|bd|aabd"),
            ("dde|ced|ccd", "(S')", "b!d|bd|aabd"),
            ("dde|ced|bdccd", "(P')", "b!d|aabd"),
            ("dde|ced|bdbdccd", "(P')", "a!abd"),
            ("dde|ced|bdbdccd|abd|a", "(F')", "-"),
        ],
        "cadcdbcdcbcbc": [
            ("-", "", "c|adcdbcdcbcbc"),
            ("c", "(Extract1)", "ad!cd!bcdc!bc!bc"),
            ("adcdc", "(P')", "bcdc|bc|bc"),
            ("adcdcbcdc", "(S')", "bc|bc"),
            ("adcdcbcdcbc", "(S')", "bc"),
            ("adcdcbcdcbcbc", "(S')", "-"),
        ],
    }


@pytest.fixture
def fs_examples() -> List[dict]:
    """f_S worked examples: subset, source and image (cycle or one-line text)."""
    return [
        {"n": 8, "set": "4,7", "source": "75218634", "image": "45672381"},
        {
            "n": 17,
            "set": "2,5,8,15",
            "source": "(9,17,10)(6,16,12)(4,13,5,11,8,7,14)(2)(1,3,15)",
            "image": "(15,17)(14)(6,8,16,13,7,12)(5,11)(4,10)(1,2,3,9)",
        },
        {"n": 8, "set": "full", "source": "(6)(1,7,3,8,4,2,5)", "image": "(4,6)(3,8)(1,7,2,5)"},
    ]


@pytest.fixture
def closed_form_totals() -> Dict[int, int]:
    """|S^o_n| = |S^e_n| for small n."""
    return {1: 1, 2: 1, 3: 3, 4: 9, 5: 45, 6: 225, 7: 1575, 8: 11025}


@pytest.fixture
def fresh_config(monkeypatch):
    """Global config whose verification settings a test may change freely."""
    config = get_config()
    monkeypatch.setattr(config.verification, "check_invariants", False)
    monkeypatch.setattr(config.verification, "show_progress", False)
    monkeypatch.setattr(config.verification, "workers", 1)
    return config
