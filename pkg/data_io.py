"""
data_io.py
결과 직렬화(JSON), 출력 스키마 검증, 표 내보내기(TSV / Excel / CSV), 스펙트럼 내보내기 및 실행 로그 관리 모듈
"""

import json
import os
from datetime import datetime

import pandas as pd

from config import FOLDERS, LOG_ENABLED, LOG_FORMAT, TZ
from errors import DomainError
from lr import ValidTuple
from partitions import Partition
from solver import QmcSolution
from utils import display_error_message, display_success_message, display_warning_message


def partition_to_json(partition):
    """Partition → 정수 배열 (예: [3, 2])"""
    return list(partition.parts)


def partition_from_json(values):
    if not isinstance(values, list):
        raise DomainError(f"partition must be a JSON array, got {values!r}")
    return Partition.from_parts(values)


def tuple_to_json(t):
    """
    ValidTuple → JSON 객체

    Returns:
        dict: lambda, factors, coefficient (인수가 세 개이면 mu, nu, zeta 도 포함)
    """
    payload = {
        "lambda": partition_to_json(t.lam),
        "factors": [partition_to_json(f) for f in t.factors],
        "coefficient": t.coefficient,
    }
    if len(t.factors) == 3:
        payload["mu"] = partition_to_json(t.mu)
        payload["nu"] = partition_to_json(t.nu)
        payload["zeta"] = partition_to_json(t.zeta)
    return payload


def tuple_from_json(payload):
    if "factors" in payload:
        factors = payload["factors"]
    else:
        factors = [payload["mu"], payload["nu"], payload["zeta"]]
    return ValidTuple(
        partition_from_json(payload["lambda"]),
        tuple(partition_from_json(f) for f in factors),
        int(payload.get("coefficient", 0)),
    )


def solution_to_json(solution, seed):
    """QmcSolution → solve 명령 출력 객체"""
    return {
        "d": solution.d,
        "parts": list(solution.parts),
        "method": solution.method,
        "value": solution.value,
        "argmax": [tuple_to_json(t) for t in solution.argmax],
        "seed": seed,
    }


def solution_from_json(payload):
    return QmcSolution(
        value=payload["value"],
        argmax=[tuple_from_json(t) for t in payload.get("argmax", [])],
        method=payload.get("method", "search"),
        d=payload["d"],
        parts=tuple(payload["parts"]),
    )


def _type_matches(value, expected):
    if expected is float:
        return isinstance(value, (int, float)) and not isinstance(value, bool)
    if expected is int:
        return isinstance(value, int) and not isinstance(value, bool)
    return isinstance(value, expected)


def validate_payload(payload, schema, path="$"):
    """
    출력 객체가 스키마(필드 → 타입)를 만족하는지 검사

    스키마 값이 [하위 스키마] 이면 객체 목록으로 보고 각 원소를 재귀 검사
    스키마에 없는 추가 필드는 허용

    Returns:
        list[str]: 문제 목록 (비어 있으면 유효)
    """
    problems = []
    if not isinstance(payload, dict):
        return [f"{path}: expected object, got {type(payload).__name__}"]
    for key, expected in schema.items():
        where = f"{path}.{key}"
        if key not in payload:
            problems.append(f"{where}: missing")
            continue
        value = payload[key]
        if isinstance(expected, list):
            if not isinstance(value, list):
                problems.append(f"{where}: expected list")
                continue
            for index, item in enumerate(value):
                problems.extend(validate_payload(item, expected[0], f"{where}[{index}]"))
        elif isinstance(expected, dict):
            problems.extend(validate_payload(value, expected, where))
        elif not _type_matches(value, expected):
            problems.append(f"{where}: expected {expected.__name__}, got {type(value).__name__}")
    return problems


def dump_payload(payload):
    """정렬된 들여쓰기 JSON 문자열"""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def rows_to_frame(rows, columns=None):
    """
    dict 행 목록 → DataFrame

    object dtype 을 유지해 정수 열에 빈 값(None)이 섞여도 float 로 바뀌지 않음
    """
    return pd.DataFrame(rows, columns=columns, dtype=object)


def frame_to_tsv(frame):
    """탭 구분 텍스트 (빈 값은 빈 칸)"""
    return frame.to_csv(sep="\t", index=False, na_rep="", lineterminator="\n")


def export_table(frame, stem, folder=None):
    """
    표를 data 폴더에 Excel 로 저장, 실패시 CSV 로 대체

    Args:
        frame: pandas DataFrame
        stem: 파일 이름 앞부분
        folder: 저장 폴더 (기본 FOLDERS["data"])

    Returns:
        str | None: 저장된 파일 경로
    """
    folder = FOLDERS["data"] if folder is None else folder
    os.makedirs(folder, exist_ok=True)
    timestamp = datetime.now(TZ).strftime(LOG_FORMAT["export_format"])
    excel_path = os.path.join(folder, f"{stem}_{timestamp}.xlsx")
    try:
        with pd.ExcelWriter(excel_path, engine="openpyxl") as writer:
            frame.to_excel(writer, sheet_name="results", index=False)
        display_success_message(f"Excel export: {excel_path}")
        return excel_path
    except Exception as e:
        display_warning_message(f"Excel export failed ({e}), falling back to CSV")

    csv_path = os.path.join(folder, f"{stem}_{timestamp}.csv")
    try:
        frame.to_csv(csv_path, index=False, encoding="utf-8-sig")
        display_success_message(f"CSV export: {csv_path}")
        return csv_path
    except Exception as e:
        display_error_message(f"CSV export failed: {e}")
        return None


def format_spectrum(values):
    """한 줄에 고유값 하나, 유효숫자 17자리, 오름차순"""
    return "".join(f"{float(value):.17g}\n" for value in sorted(values))


def write_spectrum(values, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_spectrum(values))
    return path


def log_run_status(command, status, parameters, elapsed, errors=None, folder=None):
    """
    명령 실행 결과를 일별 로그 파일에 추가

    Args:
        command: 명령 이름
        status: "SUCCESS" / "FAILED" 등
        parameters: 기록할 매개변수 dict
        elapsed: 소요 시간(초)
        errors: 오류 메시지 목록

    Returns:
        bool: 로그 기록 성공 여부
    """
    if not LOG_ENABLED:
        return False
    errors = errors or []
    folder = FOLDERS["logs"] if folder is None else folder
    try:
        os.makedirs(folder, exist_ok=True)
        now = datetime.now(TZ)
        log_filename = os.path.join(folder, now.strftime(LOG_FORMAT["filename_format"]))
        params = ", ".join(f"{key}={value}" for key, value in sorted(parameters.items()))
        log_entry = f"""
[{now.strftime(LOG_FORMAT['timestamp_format'])}] COMMAND: {command}
Status: {status}
Parameters: {params or 'None'}
Elapsed: {elapsed:.3f}s
Errors: {len(errors)} ({'; '.join(errors) if errors else 'None'})
{'=' * 80}
"""
        with open(log_filename, "a", encoding="utf-8") as log_file:
            log_file.write(log_entry)
        return True
    except Exception:
        return False
