"""
partitions.py
정수 분할(integer partition) 핵심 모듈: 열거, content, 기약표현 차원, 두 가지 η 공식
"""

from dataclasses import dataclass
from functools import cache
from math import factorial, prod

from errors import DomainError


@dataclass(frozen=True, order=True)
class Partition:
    """
    약감소(weakly decreasing) 양의 정수열. 빈 분할도 허용.

    parts 튜플 기준 사전식 비교 (order=True).
    """
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if part < 1:
                raise DomainError(f"partition parts must be positive: {parts}")
            if i > 0 and parts[i - 1] < part:
                raise DomainError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts):
        """0 을 제거한 뒤 생성 (정렬은 하지 않음)"""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def height(self):
        return len(self.parts)

    def part(self, k):
        """1-indexed k 번째 행 길이 (범위 밖은 0)"""
        if 1 <= k <= len(self.parts):
            return self.parts[k - 1]
        return 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


EMPTY = Partition(())


def _partitions_bounded(n, max_part, max_height):
    if n == 0:
        yield ()
        return
    if max_height == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # 남은 칸이 남은 행에 들어갈 수 없으면 가지치기
        if first * max_height < n:
            break
        for rest in _partitions_bounded(n - first, first, max_height - 1):
            yield (first,) + rest


@cache
def _enumerate(n, max_height):
    return tuple(Partition(parts) for parts in _partitions_bounded(n, n, max_height))


def enumerate_partitions(n, max_height):
    """
    높이 max_height 이하인 n 의 모든 분할 (사전식 내림차순)

    Args:
        n: 0 이상의 정수
        max_height: 허용 최대 행 수

    Returns:
        list[Partition]: 각 분할이 정확히 한 번씩
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return list(_enumerate(n, max(0, max_height)))


def boxes(sigma):
    """Young diagram 의 칸 좌표 (행, 열), 1-indexed"""
    return [(row, col) for row, length in enumerate(sigma.parts, start=1)
            for col in range(1, length + 1)]


def conjugate(sigma):
    """전치(conjugate) 분할"""
    if not sigma.parts:
        return EMPTY
    return Partition(tuple(sum(1 for part in sigma.parts if part >= col)
                           for col in range(1, sigma.parts[0] + 1)))


def content_sum(sigma):
    """
    Σ(σ) = 모든 칸의 (열 − 행) 합

    행 i 의 기여: Σ_{c=1..λ_i} (c − i) = λ_i(λ_i + 1)/2 − i·λ_i
    """
    return sum(part * (part + 1) // 2 - row * part
               for row, part in enumerate(sigma.parts, start=1))


def eta_contents(sigma):
    """η(σ) = |σ|² − |σ| − 2Σ(σ), 항상 짝수"""
    m = sigma.size
    return m * m - m - 2 * content_sum(sigma)


def eta_rows(sigma, d):
    """
    행 길이 공식: n² + d(d−1)(2d−1)/6 − Σ_{k=1..d} (σ_k − (k−1))²

    Args:
        sigma: 분할 (높이 ≤ d)
        d: 국소 차원

    Returns:
        int: η_σ
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    if sigma.height > d:
        raise DomainError(f"height of {sigma} exceeds d={d}")
    n = sigma.size
    constant = d * (d - 1) * (2 * d - 1) // 6
    return n * n + constant - sum((sigma.part(k) - (k - 1)) ** 2 for k in range(1, d + 1))


def hook_lengths(sigma):
    """각 칸의 hook length (행 단위 리스트)"""
    conj = conjugate(sigma)
    return [[(part - col) + (conj.part(col) - row) + 1 for col in range(1, part + 1)]
            for row, part in enumerate(sigma.parts, start=1)]


def dim_irrep(sigma):
    """f^σ: hook-length 공식 (정확한 정수 연산)"""
    if sigma.size < 1:
        raise DomainError("dim_irrep requires a nonempty partition")
    denominator = prod(hook for row in hook_lengths(sigma) for hook in row)
    return factorial(sigma.size) // denominator


def weyl_dim(sigma, d):
    """
    entries ≤ d 인 shape σ 의 semistandard tableau 개수 (hook-content 공식)

    Returns:
        int: Schur–Weyl 다중도, 높이 > d 이면 0
    """
    if sigma.height > d:
        return 0
    numerator = 1
    denominator = 1
    hooks = hook_lengths(sigma)
    for (row, col) in boxes(sigma):
        numerator *= d + col - row
        denominator *= hooks[row - 1][col - 1]
    return numerator // denominator


def is_subpartition(mu, lam):
    """모든 i 에 대해 μ_i ≤ λ_i 인지 (μ 는 0 으로 패딩)"""
    if mu.height > lam.height:
        return False
    return all(m <= l for m, l in zip(mu.parts, lam.parts))


def balanced_partition(n, h):
    """
    높이 h, 최대 파트 − 최소 파트 ≤ 1 인 n 의 유일한 분할

    Raises:
        DomainError: n < h 또는 h < 1
    """
    if h < 1:
        raise DomainError(f"height must be positive, got {h}")
    if n < h:
        raise DomainError(f"cannot split {n} into {h} positive parts")
    base, extra = divmod(n, h)
    return Partition(tuple(base + 1 if i < extra else base for i in range(h)))
