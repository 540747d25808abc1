"""
config.py
솔버 전역 설정 및 상수 정의 (로컬 .env + 환경변수 지원)
"""

import os
import sys
from dotenv import load_dotenv
from pytz import timezone

# 환경변수 로드 (로컬 개발용)
load_dotenv()


def get_setting(key, default=None):
    """
    환경변수(.env 포함)에서 설정값 읽기

    Args:
        key: 설정 키
        default: 값이 없을 때 기본값

    Returns:
        str: 설정값 (없으면 default)
    """
    value = os.getenv(key)
    if value is None or value.strip() == "":
        return default
    return value.strip()


def get_int_setting(key, default):
    """정수 설정값 읽기 (파싱 실패시 기본값)"""
    raw = get_setting(key)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        print(f"⚠️ Invalid integer for {key}: {raw!r}, using {default}", file=sys.stderr)
        return default


# 타임스탬프 시간대 (로그, 내보내기 파일명)
TZ = timezone(get_setting('QMC_TIMEZONE', 'Asia/Seoul'))

# 병렬 작업자 수 (λ 후보 탐색)
QMC_THREADS = max(1, get_int_setting('QMC_THREADS', 1))

# 파일 로그 활성화 여부
LOG_ENABLED = get_setting('QMC_LOG_ENABLED', 'true').lower() == 'true'

# 오라클(정확 대각화) 설정
ORACLE_DEFAULTS = {
    "tol": 1e-9,                 # Rayleigh quotient 증분 기준
    "max_iters": 200000,
    "seed": get_int_setting('QMC_SEED', 42),
    "max_state_dim": get_int_setting('QMC_MAX_STATE_DIM', 2 ** 22),
    "dense_limit": 4096,         # full_spectrum 허용 최대 차원
    "snap_tol": 1e-8,            # 고유값 정수 스냅 허용오차
    "complement_rtol": 1e-10,
    "lanczos_min_dim": 32,       # 이하 차원은 eigsh 대신 밀집 고유값
}

# 검증(verify) 기본 범위
VERIFY_DEFAULTS = {
    "max_n_d2": 10,
    "max_n_d3": 7,
    "oracle_tol": 1e-6,
    "clique_max_n": {2: 6, 3: 5},
    "complement_max_n": 8,
    "complement_trials": 5,
    "height_max_n": 8,
    "eta_max_n": 25,
    "eta_max_d": 6,
}

VERIFY_CHECKS = ["tripartite", "clique", "complement", "height", "eta"]

# sweep 표 기본 범위 (oracle 열은 d^n ≤ oracle_limit 일 때만)
SWEEP_DEFAULTS = {
    "min_n": 3,
    "max_n": 7,
    "d_values": [2, 3],
    "oracle_limit": 4096,
}

# 종료 코드 (고정 계약)
EXIT_CODES = {
    "ok": 0,
    "usage": 2,
    "computation": 3,
}

# 로컬 폴더 구조
FOLDERS = {
    "data": "data",
    "logs": "logs",
}

# 로그 설정
LOG_FORMAT = {
    "timestamp_format": "%Y-%m-%d %H:%M:%S",
    "filename_format": "qmc_log_%Y%m%d.txt",
    "export_format": "%Y%m%d_%H%M%S",
}

# 명령별 JSON 출력 스키마 (필드 → 타입, [스키마] 는 객체 목록)
# 인수가 세 개인 tuple 은 mu / nu / zeta 필드도 함께 기록
TUPLE_SCHEMA = {
    "lambda": list,
    "factors": list,
    "coefficient": int,
}

OUTPUT_SCHEMAS = {
    "solve": {
        "d": int,
        "parts": list,
        "method": str,
        "value": int,
        "argmax": [TUPLE_SCHEMA],
        "seed": int,
    },
    "closed-form": {
        "d": int,
        "parts": list,
        "values": dict,
        "seed": int,
    },
    "brute": {
        "d": int,
        "n": int,
        "edges": int,
        "method": str,
        "value": float,
        "iterations": int,
        "residual": float,
        "seed": int,
    },
    "verify": {
        "checks": list,
        "passed": bool,
        "results": list,
        "discrepancies": list,
        "seed": int,
    },
    "lr": {
        "lambda": list,
        "factors": list,
        "coefficient": int,
        "seed": int,
    },
    "eta": {
        "lambda": list,
        "d": int,
        "eta_contents": int,
        "eta_rows": int,
        "dim_irrep": int,
        "weyl_dim": int,
        "seed": int,
    },
    "sweep": {
        "rows": list,
        "seed": int,
    },
    "spectrum": {
        "d": int,
        "n": int,
        "eigenvalues": list,
        "seed": int,
    },
}

# 공개된 d=2 균형 분할 공식 (불일치 보고용 라벨)
PRINTED_D2_LABELS = {
    "even": "4k^2-1",
    "odd": "4k(k+1)-3",
}
