"""
solver.py
valid tuple 위에서 Ξ 최대화로 d-QMC 값을 계산 + d = 1, 2, 3 닫힌 형식 + clique 블록 고유값
"""

import multiprocessing
from dataclasses import dataclass, field

from config import QMC_THREADS
from errors import DomainError
from lr import ValidTuple, check_part_sizes, tuples_for_lambda
from partitions import (
    Partition,
    balanced_partition,
    content_sum,
    enumerate_partitions,
    eta_contents,
    eta_rows,
)

@dataclass(frozen=True)
class QmcInstance:
    """국소 차원 d 와 내림차순 파트 크기"""
    d: int
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if self.d < 1:
            raise DomainError(f"d must be positive, got {self.d}")
        check_part_sizes(self.parts, allow_zero=True)

    @classmethod
    def from_parts(cls, parts, d):
        """입력 순서와 무관하게 내림차순 정렬 후 생성"""
        return cls(d, tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def n(self):
        return sum(self.parts)


@dataclass
class QmcSolution:
    value: object
    argmax: list = field(default_factory=list)
    method: str = "search"
    d: int = 0
    parts: tuple = ()


def xi_general(lam, factors):
    """η_λ − Σ_i η_{factor_i}"""
    factors = list(factors)
    if lam.size != sum(f.size for f in factors):
        raise DomainError(f"size of {lam} does not match factor sizes {[f.size for f in factors]}")
    return eta_contents(lam) - sum(eta_contents(f) for f in factors)


def xi(lam, mu, nu, zeta):
    """Ξ(λ, μ, ν, ζ) = η_λ − η_μ − η_ν − η_ζ (항상 짝수)"""
    return xi_general(lam, (mu, nu, zeta))


def xi_contents(lam, mu, nu, zeta):
    """
    content 합 전개: 2(n(p+q) − p² − pq − q²) − 2Σ(λ) + 2(Σ(μ) + Σ(ν) + Σ(ζ))

    μ, ν, ζ 의 content 합 계수는 2 (η 차이와 항등적으로 같음)
    """
    n, p, q = lam.size, mu.size, nu.size
    if n != p + q + zeta.size:
        raise DomainError("size mismatch in content expansion")
    constant = 2 * (n * (p + q) - p * p - p * q - q * q)
    return constant - 2 * content_sum(lam) + 2 * (content_sum(mu) + content_sum(nu) + content_sum(zeta))


def _search_candidate(args):
    """λ 하나에 대한 (최대 Ξ, 최대 tuple 목록). 작업자 프로세스에서 호출"""
    lam_parts, part_sizes = args
    lam = Partition(lam_parts)
    best = None
    winners = []
    for candidate in tuples_for_lambda(lam, part_sizes):
        value = xi_general(candidate.lam, candidate.factors)
        if best is None or value > best:
            best, winners = value, [candidate]
        elif value == best:
            winners.append(candidate)
    return best, winners


def _run_candidates(candidates, part_sizes, workers):
    jobs = [(lam.parts, tuple(part_sizes)) for lam in candidates]
    if workers > 1 and len(jobs) > 1:
        with multiprocessing.Pool(processes=min(workers, len(jobs))) as pool:
            return pool.map(_search_candidate, jobs)
    return [_search_candidate(job) for job in jobs]


def _search(d, part_sizes, height=None, workers=None):
    workers = QMC_THREADS if workers is None else workers
    n = sum(part_sizes)
    candidates = enumerate_partitions(n, d)
    if height is not None:
        candidates = [lam for lam in candidates if lam.height == height]

    best = None
    argmax = []
    # 병합 순서는 작업자 스케줄과 무관 (pool.map 은 입력 순서 유지, 마지막에 정렬)
    for value, winners in _run_candidates(candidates, part_sizes, workers):
        if value is None:
            continue
        if best is None or value > best:
            best, argmax = value, list(winners)
        elif value == best:
            argmax.extend(winners)
    return best, sorted(argmax, key=ValidTuple.sort_key)


def solve_search(inst, height=None, workers=None):
    """
    valid_tuples(p, q, r, d) 위에서 Ξ 최대값과 전체 argmax

    Args:
        inst: 세 파트 QmcInstance (r ≥ 1)
        height: 주어지면 height(λ) == height 인 λ 만 탐색
        workers: 작업자 수 (기본 QMC_THREADS)

    Returns:
        QmcSolution: method = "search"
    """
    if len(inst.parts) != 3:
        raise DomainError(f"tripartite search needs 3 parts, got {list(inst.parts)}")
    check_part_sizes(inst.parts)
    value, argmax = _search(inst.d, inst.parts, height=height, workers=workers)
    return QmcSolution(value, argmax, "search", inst.d, inst.parts)


def solve_multipartite(parts, d, workers=None):
    """
    k 개 파트로 일반화한 탐색: η_λ − Σ η_{μ_i} 최대화 (빈 파트는 빈 분할)
    """
    parts = check_part_sizes(parts, allow_zero=True)
    if len(parts) < 2:
        raise DomainError(f"multipartite search needs at least 2 parts, got {parts}")
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    value, argmax = _search(d, parts, workers=workers)
    return QmcSolution(value, argmax, "search", d, tuple(parts))


def max_xi_by_height(inst, workers=None):
    """
    λ 높이별 최대 Ξ (valid tuple 이 없는 높이는 제외)

    Returns:
        dict: {높이: 최대 Ξ}
    """
    result = {}
    for h in range(1, min(inst.d, inst.n) + 1):
        value, _ = _search(inst.d, inst.parts, height=h, workers=workers)
        if value is not None:
            result[h] = value
    return result


def closed_form_d1(p, q, r):
    """1-QMC: 항상 0"""
    check_part_sizes([p, q, r])
    return 0


def closed_form_d2(p, q, r):
    """
    2-QMC 닫힌 형식

    p ≥ q + r 이면 2(n − p)(p + 1), 아니면 높이 2 균형 분할의 η
    (n = 2k → 2k(k+1), n = 2k+1 → 2k(k+2))
    """
    check_part_sizes([p, q, r])
    n = p + q + r
    if p >= q + r:
        return 2 * (n - p) * (p + 1)
    return eta_contents(balanced_partition(n, 2))


def printed_closed_form_d2(p, q, r):
    """정리에 인쇄된 그대로의 d=2 값 (균형 분할 경우 홀수 → 불일치 보고용)"""
    check_part_sizes([p, q, r])
    n = p + q + r
    if p >= q + r:
        return 2 * (n - p) * (p + 1)
    k, odd = divmod(n, 2)
    if odd:
        return 4 * k * (k + 1) - 3
    return 4 * k * k - 1


def closed_form_d3(p, q, r):
    """3-QMC: 2n(2 + p + q) − 2(p² + q + q² + p(2 + q))"""
    check_part_sizes([p, q, r])
    n = p + q + r
    return 2 * n * (2 + p + q) - 2 * (p * p + q + q * q + p * (2 + q))


def closed_form_argmax(p, q, r, d):
    """
    닫힌 형식이 최대값을 얻는다고 명시된 tuple (μ = (p), ν = (q), ζ = (r))

    Returns:
        tuple: (λ, μ, ν, ζ) 또는 d ≥ 4 이면 None
    """
    check_part_sizes([p, q, r])
    n = p + q + r
    singles = (Partition((p,)), Partition((q,)), Partition((r,)))
    if d == 1:
        lam = Partition((n,))
    elif d == 2:
        lam = Partition((p, n - p)) if p >= q + r else balanced_partition(n, 2)
    elif d == 3:
        lam = Partition((p, q, r))
    else:
        return None
    return (lam,) + singles


def closed_form(p, q, r, d):
    """d ∈ {1, 2, 3} 닫힌 형식 값, 그 외 None"""
    forms = {1: closed_form_d1, 2: closed_form_d2, 3: closed_form_d3}
    if d not in forms:
        return None
    return forms[d](p, q, r)


def clique_block_eigenvalue(lam, d):
    """H_{K_n} 이 irrep λ 블록에서 갖는 스칼라 η_λ (행 공식)"""
    return eta_rows(lam, d)
