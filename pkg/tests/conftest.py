import pytest

import data_io


@pytest.fixture(autouse=True)
def no_run_log(monkeypatch):
    """테스트 중에는 logs/ 에 실행 로그를 남기지 않음"""
    monkeypatch.setattr(data_io, "LOG_ENABLED", False)


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="graph.edges"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
