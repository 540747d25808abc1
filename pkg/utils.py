"""
utils.py
명령행 값 파싱 및 텍스트 출력 헬퍼 (상태 메시지는 stderr, 결과는 stdout)
"""

import sys

from errors import DomainError
from partitions import Partition


def _emit(prefix, message):
    print(f"{prefix} {message}", file=sys.stderr)


def display_error_message(message, solution=""):
    """오류 메시지 (+ 해결 방법)"""
    _emit("❌", message)
    if solution:
        _emit("💡", solution)


def display_success_message(message):
    _emit("✅", message)


def display_warning_message(message):
    _emit("⚠️", message)


def display_info_message(message):
    _emit("ℹ️", message)


def parse_parts(text):
    """
    '3,2,1' → [3, 2, 1] (입력 순서 유지)

    Raises:
        DomainError: 정수가 아니거나 음수인 항목
    """
    tokens = [token.strip() for token in str(text).split(",")]
    if not tokens or any(token == "" for token in tokens):
        raise DomainError(f"invalid part list: {text!r}")
    try:
        parts = [int(token) for token in tokens]
    except ValueError:
        raise DomainError(f"part sizes must be integers: {text!r}") from None
    if any(p < 0 for p in parts):
        raise DomainError(f"part sizes must be nonnegative: {text!r}")
    return parts


def parse_partition(text):
    """'3,3,2' → Partition((3, 3, 2)); 약감소가 아니면 DomainError"""
    return Partition.from_parts(parse_parts(text))


def parse_factors(text):
    """'2,1/3/2' → [(2,1), (3), (2)] (인수는 '/' 로 구분)"""
    chunks = str(text).split("/")
    if any(chunk.strip() == "" for chunk in chunks):
        raise DomainError(f"invalid factor list: {text!r}")
    return [parse_partition(chunk) for chunk in chunks]


def format_parts(parts):
    return ",".join(str(p) for p in parts)


def format_tuple(t):
    """λ | μ ν ζ  (c=k)"""
    factors = " ".join(str(f) for f in t.factors)
    return f"{t.lam} | {factors}  (c={t.coefficient})"
