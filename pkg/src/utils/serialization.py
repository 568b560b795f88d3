"""
JSON helpers: hex polynomials, exact rationals, deterministic dumps
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence


def to_hex(bits: int) -> str:
    return format(bits, 'x')


def from_hex(text: str) -> int:
    value = int(text, 16)
    if value < 0:
        raise ValueError(f"Negative hex value {text!r}")
    return value


def hex_list(values: Sequence[int]) -> List[str]:
    return [to_hex(v) for v in values]


def rational(value) -> Dict[str, Any]:
    """Fraction as {"num", "den", "decimal"}"""
    value = Fraction(value)
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": f"{float(value):.6f}",
    }


def parse_rational(data: Dict[str, Any]) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


def dumps(payload: Any, pretty: bool = True) -> str:
    """Sorted keys so identical inputs give byte-identical output"""
    return json.dumps(payload, sort_keys=True, indent=2 if pretty else None, ensure_ascii=False)
