"""
oracle.py
swap Hamiltonian 의 행렬 없는(matrix-free) 정확 대각화: 최대 고유값(기준값) + 소규모 전체 스펙트럼 검증

인덱스 규약: site 0 이 가장 높은 자리의 d-진 숫자 (C-order reshape 의 axis 0)
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from config import ORACLE_DEFAULTS
from errors import ConvergenceError, DomainError, SizeGuardError
from graphs import Graph, complement_decomposition, complete_graph, complete_multipartite
from partitions import dim_irrep, enumerate_partitions, eta_rows, weyl_dim
from utils import display_warning_message


@dataclass
class StateVector:
    """(ℂ^d)^⊗n 원소의 실수 진폭 (길이 d^n)"""
    d: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=float).reshape(-1)
        if self.amplitudes.shape[0] != self.d ** self.n:
            raise DomainError(
                f"state length {self.amplitudes.shape[0]} does not match d^n = {self.d ** self.n}"
            )

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class HamiltonianOperator:
    """H_G^d = Σ_{(i,j)∈E} 2(I − Swap_ij)"""
    graph: Graph
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"local dimension must be positive, got {self.d}")

    @property
    def n(self):
        return self.graph.n

    @property
    def dim(self):
        return self.d ** self.graph.n


@dataclass
class EigenResult:
    value: float
    iterations: int
    residual: float
    method: str
    seed: int


def check_state_budget(d, n, limit=None):
    """d^n 이 허용 한도 이하인지 확인"""
    limit = ORACLE_DEFAULTS["max_state_dim"] if limit is None else limit
    if d ** n > limit:
        raise SizeGuardError(f"state dimension {d}^{n} = {d ** n} exceeds budget {limit}")


def basis_state(d, digits):
    """d-진 숫자열 |digits⟩ 에 해당하는 표준 기저 벡터"""
    n = len(digits)
    index = 0
    for digit in digits:
        index = index * d + digit
    amplitudes = np.zeros(d ** n)
    amplitudes[index] = 1.0
    return StateVector(d, n, amplitudes)


def random_state(d, n, seed):
    """seed 고정 정규분포 난수 상태"""
    rng = np.random.default_rng(seed)
    return StateVector(d, n, rng.normal(size=d ** n))


def _swap_array(amplitudes, d, n, i, j):
    return np.swapaxes(amplitudes.reshape((d,) * n), i, j).reshape(-1)


def apply_swap(v, i, j):
    """
    Swap_ij: 기저 인덱스의 i, j 번째 d-진 숫자를 교환한 진폭

    Raises:
        DomainError: i == j 또는 범위 밖 site
    """
    if i == j:
        raise DomainError(f"swap needs two distinct sites, got {i}")
    if not (0 <= i < v.n and 0 <= j < v.n):
        raise DomainError(f"sites ({i}, {j}) out of range for n={v.n}")
    return StateVector(v.d, v.n, _swap_array(v.amplitudes, v.d, v.n, i, j))


def _apply(H, amplitudes):
    result = 2.0 * H.graph.edge_count * amplitudes
    for i, j in H.graph.sorted_edges():
        result -= 2.0 * _swap_array(amplitudes, H.d, H.n, i, j)
    return result


def apply_hamiltonian(H, v):
    """Σ_edges 2(v − Swap_ij v), d^n × d^n 행렬을 만들지 않음"""
    if v.d != H.d or v.n != H.n:
        raise DomainError(f"state (d={v.d}, n={v.n}) does not match operator (d={H.d}, n={H.n})")
    return StateVector(H.d, H.n, _apply(H, v.amplitudes))


def _power_iteration(H, tol, max_iters, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=H.dim)
    x /= np.linalg.norm(x)
    previous = None
    rayleigh = 0.0
    y = _apply(H, x)
    for iteration in range(1, max_iters + 1):
        rayleigh = float(x @ y)
        y_norm = np.linalg.norm(y)
        if y_norm == 0.0:
            # 임의 시작 벡터가 영으로 보내짐 → H = 0
            return EigenResult(0.0, iteration, 0.0, "power", seed)
        if previous is not None and abs(rayleigh - previous) < tol:
            residual = float(np.linalg.norm(y - rayleigh * x))
            return EigenResult(rayleigh, iteration, residual, "power", seed)
        previous = rayleigh
        x = y / y_norm
        y = _apply(H, x)
    residual = float(np.linalg.norm(y - float(x @ y) * x))
    raise ConvergenceError("power iteration did not converge", rayleigh, residual, max_iters)


def _lanczos(H, tol, max_iters, seed):
    dim = H.dim
    if dim <= ORACLE_DEFAULTS["lanczos_min_dim"]:
        values = full_spectrum(H)
        return EigenResult(float(values[-1]), 0, 0.0, "lanczos", seed)
    rng = np.random.default_rng(seed)
    operator = LinearOperator((dim, dim), matvec=lambda x: _apply(H, np.asarray(x).reshape(-1)),
                              dtype=float)
    try:
        values, vectors = eigsh(operator, k=1, which="LA", v0=rng.normal(size=dim),
                                tol=tol, maxiter=max_iters)
    except Exception as exc:
        raise ConvergenceError(f"Lanczos failed: {exc}", float("nan"), float("nan"), max_iters) from exc
    vector = vectors[:, 0]
    residual = float(np.linalg.norm(_apply(H, vector) - values[0] * vector))
    return EigenResult(float(values[0]), 0, residual, "lanczos", seed)


def estimate_max_eigenvalue(H, tol=None, max_iters=None, seed=None, method="power"):
    """
    최대 고유값 + 수렴 진단 정보

    H 가 양의 준정부호이므로 절댓값 최대 고유값 = 최대 고유값 (shift 불필요)

    Args:
        method: "power" (기본) 또는 "lanczos" (scipy eigsh)

    Returns:
        EigenResult
    """
    tol = ORACLE_DEFAULTS["tol"] if tol is None else tol
    max_iters = ORACLE_DEFAULTS["max_iters"] if max_iters is None else max_iters
    seed = ORACLE_DEFAULTS["seed"] if seed is None else seed
    check_state_budget(H.d, H.n)
    if H.graph.edge_count == 0:
        return EigenResult(0.0, 0, 0.0, method, seed)
    if method == "power":
        return _power_iteration(H, tol, max_iters, seed)
    if method == "lanczos":
        return _lanczos(H, tol, max_iters, seed)
    raise DomainError(f"unknown eigensolver method: {method}")


def max_eigenvalue(H, tol=None, max_iters=None, seed=None, method="power"):
    """최대 고유값 ∈ [0, 4|E|]"""
    return estimate_max_eigenvalue(H, tol, max_iters, seed, method).value


def multipartite_max_eigenvalue(parts, d, **kwargs):
    """K_{parts} 의 d-QMC 기준값"""
    return max_eigenvalue(HamiltonianOperator(complete_multipartite(parts), d), **kwargs)


def hamiltonian_matrix(H):
    """밀집 행렬 (dense_limit 이하에서만)"""
    limit = ORACLE_DEFAULTS["dense_limit"]
    if H.dim > limit:
        raise SizeGuardError(f"dense matrix of dimension {H.dim} exceeds limit {limit}")
    dim = H.dim
    index = np.arange(dim)
    matrix = 2.0 * H.graph.edge_count * np.eye(dim)
    for i, j in H.graph.sorted_edges():
        permutation = _swap_array(index, H.d, H.n, i, j)
        matrix[index, permutation] -= 2.0
    return matrix


def full_spectrum(H):
    """모든 d^n 고유값 (중복 포함, 오름차순)"""
    return np.linalg.eigvalsh(hamiltonian_matrix(H))


def spectrum_trace(graph, d):
    """tr H = 2|E| d^n (1 − 1/d)  (tr Swap_ij = d^{n−1})"""
    return 2.0 * graph.edge_count * d ** graph.n * (1.0 - 1.0 / d)


def snap_to_integers(values, tol=None):
    """
    고유값을 가장 가까운 정수로 스냅

    Returns:
        list[int] | None: 허용오차를 벗어난 값이 있으면 None
    """
    tol = ORACLE_DEFAULTS["snap_tol"] if tol is None else tol
    snapped = []
    for value in values:
        nearest = int(round(float(value)))
        if abs(value - nearest) > tol:
            return None
        snapped.append(nearest)
    return snapped


def expected_clique_spectrum(n, d):
    """{η_λ: Σ f^λ · weyl_dim(λ, d)}, λ ⊢ n, 높이 ≤ d"""
    expected = Counter()
    for lam in enumerate_partitions(n, d):
        expected[eta_rows(lam, d)] += dim_irrep(lam) * weyl_dim(lam, d)
    return expected


def verify_clique_spectrum(n, d):
    """K_n 스펙트럼 다중집합이 Schur–Weyl 예측과 일치하는지"""
    spectrum = full_spectrum(HamiltonianOperator(complete_graph(n), d))
    snapped = snap_to_integers(spectrum)
    if snapped is None:
        display_warning_message(f"Non-integer eigenvalue in K_{n} spectrum at d={d}")
        return False
    return Counter(snapped) == expected_clique_spectrum(n, d)


def verify_complement_identity(parts, d, trials, seed):
    """
    H(K_parts) + Σ H(part clique) == H(K_n) 를 seed 고정 난수 벡터로 확인
    """
    check_state_budget(d, sum(parts))
    rtol = ORACLE_DEFAULTS["complement_rtol"]
    n = sum(parts)
    multipartite = HamiltonianOperator(complete_multipartite(parts), d)
    full, cliques = complement_decomposition(parts)
    full_op = HamiltonianOperator(full, d)
    clique_ops = [HamiltonianOperator(clique, d) for clique in cliques]
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        v = rng.normal(size=d ** n)
        lhs = _apply(multipartite, v)
        for op in clique_ops:
            lhs = lhs + _apply(op, v)
        rhs = _apply(full_op, v)
        scale = max(1.0, float(np.max(np.abs(rhs))))
        if not np.allclose(lhs, rhs, rtol=rtol, atol=rtol * scale):
            return False
    return True
