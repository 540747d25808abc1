"""
errors.py
솔버 전체에서 사용하는 예외 계층
"""


class QmcError(Exception):
    """모든 솔버 오류의 기본 클래스"""


class DomainError(QmcError, ValueError):
    """전제조건(도메인) 위반: 높이 초과, 크기 불일치, 정렬되지 않은 파트 등"""


class StructureError(QmcError, ValueError):
    """tableau 모양과 채움(filling)이 맞지 않음"""


class GraphParseError(QmcError, ValueError):
    """edge-list 파싱 오류 (줄 번호 포함)"""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SizeGuardError(QmcError):
    """d^n 이 메모리/밀집 행렬 한도를 넘음"""


class ConvergenceError(QmcError):
    """반복 고유값 계산이 max_iters 안에 수렴하지 않음"""

    def __init__(self, message, rayleigh, residual, iterations):
        super().__init__(
            f"{message} (rayleigh={rayleigh:.12g}, residual={residual:.3e}, iterations={iterations})"
        )
        self.rayleigh = rayleigh
        self.residual = residual
        self.iterations = iterations
