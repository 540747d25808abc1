"""
main.py
완전 다분 그래프 d-QMC 솔버 - 명령행 진입점

사용 예:
  python main.py solve --d 3 --parts 2,2,1
  python main.py brute --d 2 --graph tri.edges --output text
  python main.py verify --max-n 7 --checks tripartite,clique
  python main.py lr --lambda 3,3,2 --factors 2,1/2,1/2 --direct
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from config import (
    EXIT_CODES,
    ORACLE_DEFAULTS,
    OUTPUT_SCHEMAS,
    PRINTED_D2_LABELS,
    SWEEP_DEFAULTS,
    VERIFY_CHECKS,
    VERIFY_DEFAULTS,
)
from data_io import (
    dump_payload,
    export_table,
    format_spectrum,
    frame_to_tsv,
    log_run_status,
    partition_to_json,
    rows_to_frame,
    solution_to_json,
    tuple_to_json,
    validate_payload,
    write_spectrum,
)
from errors import ConvergenceError, DomainError, GraphParseError, SizeGuardError, StructureError
from graphs import complete_multipartite, read_edge_list
from lr import SkewShape, ValidTuple, iter_lr_fillings, iterated_lr, iterated_lr_direct
from oracle import (
    HamiltonianOperator,
    estimate_max_eigenvalue,
    full_spectrum,
    multipartite_max_eigenvalue,
    spectrum_trace,
    verify_clique_spectrum,
    verify_complement_identity,
)
from partitions import dim_irrep, enumerate_partitions, eta_contents, eta_rows, is_subpartition, weyl_dim
from solver import (
    QmcInstance,
    closed_form,
    closed_form_argmax,
    max_xi_by_height,
    printed_closed_form_d2,
    solve_multipartite,
    solve_search,
    xi,
)
from utils import (
    display_error_message,
    display_info_message,
    display_success_message,
    display_warning_message,
    format_parts,
    format_tuple,
    parse_factors,
    parse_partition,
    parse_parts,
)

COMMANDS = ("solve", "closed-form", "brute", "verify", "lr", "eta", "sweep", "spectrum")
GRAPH_COMMANDS = ("brute", "spectrum")


@dataclass
class RunConfig:
    """명령 하나의 실행 설정 (argparse 결과를 검증한 값)"""
    command: str
    d: int = None
    parts: list = None
    graph_file: str = None
    tol: float = ORACLE_DEFAULTS["tol"]
    max_iters: int = ORACLE_DEFAULTS["max_iters"]
    seed: int = ORACLE_DEFAULTS["seed"]
    output: str = "json"
    method: str = "power"
    lam: object = None
    factors: list = None
    direct: bool = False
    min_n: int = None
    max_n: int = None
    checks: list = field(default_factory=lambda: ["tripartite"])
    excel: bool = False
    export: str = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command: {self.command}")
        if self.output not in ("json", "text"):
            raise DomainError(f"unknown output format: {self.output}")
        if self.d is not None and self.d < 1:
            raise DomainError(f"--d must be positive, got {self.d}")
        if self.command in GRAPH_COMMANDS and (self.parts is None) == (self.graph_file is None):
            raise DomainError(f"{self.command} needs exactly one of --parts or --graph")
        unknown = [c for c in self.checks if c not in VERIFY_CHECKS]
        if unknown:
            raise DomainError(f"unknown checks {unknown}; choose from {VERIFY_CHECKS}")


@dataclass
class CommandResult:
    payload: dict
    text: str
    exit_code: int = EXIT_CODES["ok"]


def _require(value, flag):
    if value is None:
        raise DomainError(f"missing required option {flag}")
    return value


def _tripartite(parts):
    parts = sorted(parts, reverse=True)
    if len(parts) != 3 or parts[-1] < 1:
        raise DomainError(f"expected three positive part sizes, got {format_parts(parts)}")
    return parts


def _build_graph(config):
    if config.graph_file is not None:
        return read_edge_list(config.graph_file)
    return complete_multipartite(config.parts)


def cmd_solve(config):
    """valid tuple 탐색 (세 파트가 아니면 다분 확장)"""
    d = _require(config.d, "--d")
    parts = _require(config.parts, "--parts")
    if len(parts) == 3 and min(parts) >= 1:
        solution = solve_search(QmcInstance.from_parts(parts, d))
    else:
        solution = solve_multipartite(sorted(parts, reverse=True), d)
    if solution.value is None:
        raise DomainError(f"no valid tuple for parts {format_parts(parts)}")
    lines = [f"K_{{{format_parts(solution.parts)}}}, d={d}: {solution.value}"]
    lines.extend(f"  {format_tuple(t)}" for t in solution.argmax)
    return CommandResult(solution_to_json(solution, config.seed), "\n".join(lines))


def cmd_closed_form(config):
    d = _require(config.d, "--d")
    p, q, r = _tripartite(_require(config.parts, "--parts"))
    value = closed_form(p, q, r, d)
    values = {"closed_form": value}
    argmax = closed_form_argmax(p, q, r, d)
    if argmax is not None:
        lam, factors = argmax[0], argmax[1:]
        values["argmax"] = tuple_to_json(ValidTuple(lam, factors, iterated_lr(lam, factors)))
        values["xi_at_argmax"] = xi(*argmax)
    if d == 2:
        printed = printed_closed_form_d2(p, q, r)
        values["printed"] = printed
        values["matches_printed"] = printed == value
    if value is None:
        display_warning_message(f"No closed form for d={d}; use the solve command")

    lines = [f"K_{{{p},{q},{r}}}, d={d}: closed form {value}"]
    if d == 2 and not values["matches_printed"]:
        label = PRINTED_D2_LABELS["odd" if (p + q + r) % 2 else "even"]
        lines.append(f"  printed {label} = {values['printed']} (differs)")
    payload = {"d": d, "parts": [p, q, r], "values": values, "seed": config.seed}
    return CommandResult(payload, "\n".join(lines))


def cmd_brute(config):
    """정확 대각화 최대 고유값 + 수렴 진단"""
    d = _require(config.d, "--d")
    graph = _build_graph(config)
    H = HamiltonianOperator(graph, d)
    result = estimate_max_eigenvalue(H, config.tol, config.max_iters, config.seed, config.method)
    payload = {
        "d": d,
        "n": graph.n,
        "edges": graph.edge_count,
        "method": result.method,
        "value": result.value,
        "iterations": result.iterations,
        "residual": result.residual,
        "seed": result.seed,
    }
    text = (f"{result.value:.12g} (n={graph.n}, |E|={graph.edge_count}, "
            f"iterations={result.iterations}, residual={result.residual:.3e})")
    return CommandResult(payload, text)


def _tripartite_grid(n_max):
    for n in range(3, n_max + 1):
        for lam in enumerate_partitions(n, 3):
            if lam.height == 3:
                yield lam.parts


def _verify_tripartite(config, rows, discrepancies):
    tol = VERIFY_DEFAULTS["oracle_tol"]
    for d, default_max in ((2, VERIFY_DEFAULTS["max_n_d2"]), (3, VERIFY_DEFAULTS["max_n_d3"])):
        n_max = default_max if config.max_n is None else config.max_n
        for p, q, r in _tripartite_grid(n_max):
            n = p + q + r
            search = solve_search(QmcInstance(d, (p, q, r))).value
            formula = closed_form(p, q, r, d)
            oracle = None
            if d ** n <= ORACLE_DEFAULTS["max_state_dim"]:
                oracle = multipartite_max_eigenvalue(
                    (p, q, r), d, tol=config.tol, max_iters=config.max_iters, seed=config.seed
                )
            ok = search == formula and (oracle is None or abs(search - oracle) <= tol)
            rows.append({
                "check": "tripartite", "d": d, "parts": [p, q, r], "search": search,
                "closed_form": formula, "oracle": oracle, "status": "PASS" if ok else "FAIL",
            })
            if d == 2:
                printed = printed_closed_form_d2(p, q, r)
                if printed != search:
                    discrepancies.append({"d": d, "parts": [p, q, r], "printed": printed, "computed": search})


def _verify_clique(config, rows):
    for d, default_max in sorted(VERIFY_DEFAULTS["clique_max_n"].items()):
        n_max = default_max if config.max_n is None else min(default_max, config.max_n)
        for n in range(1, n_max + 1):
            ok = verify_clique_spectrum(n, d)
            rows.append({"check": "clique", "d": d, "n": n, "status": "PASS" if ok else "FAIL"})


def _verify_complement(config, rows):
    n_cap = VERIFY_DEFAULTS["complement_max_n"]
    n_max = n_cap if config.max_n is None else min(n_cap, config.max_n)
    for d in (2, 3):
        for n in range(1, n_max + 1):
            for lam in enumerate_partitions(n, n):
                ok = verify_complement_identity(lam.parts, d, VERIFY_DEFAULTS["complement_trials"], config.seed)
                rows.append({"check": "complement", "d": d, "parts": list(lam.parts),
                             "status": "PASS" if ok else "FAIL"})


def _verify_height(config, rows):
    n_cap = VERIFY_DEFAULTS["height_max_n"]
    n_max = n_cap if config.max_n is None else min(n_cap, config.max_n)
    for d in (2, 3):
        for parts in _tripartite_grid(n_max):
            inst = QmcInstance(d, parts)
            best = solve_search(inst).value
            by_height = max_xi_by_height(inst)
            top = min(d, inst.n)
            ok = top in by_height and by_height[top] == best
            rows.append({"check": "height", "d": d, "parts": list(parts), "best": best,
                         "best_at_height": by_height.get(top), "status": "PASS" if ok else "FAIL"})


def _verify_eta(config, rows):
    n_cap = VERIFY_DEFAULTS["eta_max_n"]
    n_max = n_cap if config.max_n is None else min(n_cap, config.max_n)
    for d in range(1, VERIFY_DEFAULTS["eta_max_d"] + 1):
        mismatches = [lam for n in range(n_max + 1) for lam in enumerate_partitions(n, d)
                      if eta_rows(lam, d) != eta_contents(lam)]
        rows.append({"check": "eta", "d": d, "max_n": n_max, "mismatches": len(mismatches),
                     "status": "FAIL" if mismatches else "PASS"})


def cmd_verify(config):
    """
    검증 모음 실행 (tripartite: 탐색 vs 닫힌 형식 vs 오라클)

    d=2 균형 분할 경우의 인쇄된 상수와 계산값 차이는 실패가 아닌 discrepancy 로 보고
    """
    rows = []
    discrepancies = []
    runners = {
        "tripartite": lambda: _verify_tripartite(config, rows, discrepancies),
        "clique": lambda: _verify_clique(config, rows),
        "complement": lambda: _verify_complement(config, rows),
        "height": lambda: _verify_height(config, rows),
        "eta": lambda: _verify_eta(config, rows),
    }
    for check in config.checks:
        display_info_message(f"Running {check} check...")
        runners[check]()

    failed = [row for row in rows if row["status"] != "PASS"]
    passed = not failed
    payload = {
        "checks": list(config.checks),
        "passed": passed,
        "results": rows,
        "discrepancies": discrepancies,
        "seed": config.seed,
    }

    lines = []
    for row in rows:
        detail = ", ".join(f"{k}={row[k]}" for k in row if k not in ("check", "status"))
        lines.append(f"{row['status']} {row['check']} {detail}")
    for item in discrepancies:
        lines.append(f"DISCREPANCY K_{{{format_parts(item['parts'])}}}, d={item['d']}: "
                     f"printed {item['printed']}, computed {item['computed']}")
    lines.append(f"{len(rows) - len(failed)}/{len(rows)} passed")

    if passed:
        display_success_message(f"All {len(rows)} checks passed")
        return CommandResult(payload, "\n".join(lines))
    display_error_message(f"{len(failed)} of {len(rows)} checks failed")
    return CommandResult(payload, "\n".join(lines), EXIT_CODES["computation"])


def _direct_count(lam, factors):
    if len(factors) == 3:
        return iterated_lr_direct(lam, *factors)
    if len(factors) == 2:
        mu, nu = factors
        if lam.size != mu.size + nu.size or not is_subpartition(mu, lam):
            return 0
        return sum(1 for _ in iter_lr_fillings(SkewShape(lam, mu), nu))
    raise DomainError("direct count supports two or three factors")


def cmd_lr(config):
    lam = _require(config.lam, "--lambda")
    factors = _require(config.factors, "--factors")
    coefficient = iterated_lr(lam, factors)
    payload = {
        "lambda": partition_to_json(lam),
        "factors": [partition_to_json(f) for f in factors],
        "coefficient": coefficient,
        "seed": config.seed,
    }
    text = f"c^{lam}_{{{' '.join(str(f) for f in factors)}}} = {coefficient}"
    if config.direct:
        direct = _direct_count(lam, factors)
        payload["direct"] = direct
        payload["agree"] = direct == coefficient
        text += f" (direct count {direct})"
        if direct != coefficient:
            display_error_message("composition and direct count disagree")
            return CommandResult(payload, text, EXIT_CODES["computation"])
    return CommandResult(payload, text)


def cmd_eta(config):
    lam = _require(config.lam, "--lambda")
    d = _require(config.d, "--d")
    payload = {
        "lambda": partition_to_json(lam),
        "d": d,
        "eta_contents": eta_contents(lam),
        "eta_rows": eta_rows(lam, d),
        "dim_irrep": dim_irrep(lam),
        "weyl_dim": weyl_dim(lam, d),
        "seed": config.seed,
    }
    text = (f"η{lam} = {payload['eta_rows']} (contents {payload['eta_contents']}), "
            f"f = {payload['dim_irrep']}, weyl_dim = {payload['weyl_dim']}")
    return CommandResult(payload, text)


def cmd_sweep(config):
    """범위 안 모든 세 파트 인스턴스의 값 표"""
    d_values = [config.d] if config.d is not None else SWEEP_DEFAULTS["d_values"]
    min_n = SWEEP_DEFAULTS["min_n"] if config.min_n is None else max(3, config.min_n)
    max_n = SWEEP_DEFAULTS["max_n"] if config.max_n is None else config.max_n
    rows = []
    for d in d_values:
        for p, q, r in _tripartite_grid(max_n):
            n = p + q + r
            if n < min_n:
                continue
            oracle = None
            if d ** n <= SWEEP_DEFAULTS["oracle_limit"]:
                oracle = round(multipartite_max_eigenvalue(
                    (p, q, r), d, tol=config.tol, max_iters=config.max_iters, seed=config.seed), 9)
            rows.append({
                "p": p, "q": q, "r": r, "n": n, "d": d,
                "search_value": solve_search(QmcInstance(d, (p, q, r))).value,
                "closed_form_value": closed_form(p, q, r, d),
                "oracle_value": oracle,
            })
    rows.sort(key=lambda row: (row["d"], row["n"], -row["p"], -row["q"], -row["r"]))
    frame = rows_to_frame(rows, columns=["p", "q", "r", "n", "d", "search_value",
                                         "closed_form_value", "oracle_value"])
    if config.excel:
        export_table(frame, "qmc_sweep")
    return CommandResult({"rows": rows, "seed": config.seed}, frame_to_tsv(frame).rstrip("\n"))


def cmd_spectrum(config):
    d = _require(config.d, "--d")
    graph = _build_graph(config)
    values = [float(v) for v in full_spectrum(HamiltonianOperator(graph, d))]
    if config.export:
        write_spectrum(values, config.export)
        display_success_message(f"Spectrum written: {config.export}")
    payload = {
        "d": d,
        "n": graph.n,
        "eigenvalues": values,
        "trace": sum(values),
        "expected_trace": spectrum_trace(graph, d),
        "seed": config.seed,
    }
    return CommandResult(payload, format_spectrum(values).rstrip("\n"))


HANDLERS = {
    "solve": cmd_solve,
    "closed-form": cmd_closed_form,
    "brute": cmd_brute,
    "verify": cmd_verify,
    "lr": cmd_lr,
    "eta": cmd_eta,
    "sweep": cmd_sweep,
    "spectrum": cmd_spectrum,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=ORACLE_DEFAULTS["seed"])
    common.add_argument("--tol", type=float, default=ORACLE_DEFAULTS["tol"])
    common.add_argument("--max-iters", type=int, default=ORACLE_DEFAULTS["max_iters"])

    parser = argparse.ArgumentParser(prog="qmc", description="Exact d-QMC values for complete multipartite graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", parents=[common], help="Maximize Xi over valid tuples")
    solve.add_argument("--d", type=int, required=True)
    solve.add_argument("--parts", required=True, help="Comma-separated part sizes, e.g. 2,2,1")

    closed = sub.add_parser("closed-form", parents=[common], help="Closed forms for d = 1, 2, 3")
    closed.add_argument("--d", type=int, required=True)
    closed.add_argument("--parts", required=True)

    for name, help_text in (("brute", "Largest eigenvalue by exact diagonalization"),
                            ("spectrum", "Full spectrum of a small swap Hamiltonian")):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("--d", type=int, required=True)
        source = cmd.add_mutually_exclusive_group(required=True)
        source.add_argument("--parts")
        source.add_argument("--graph", dest="graph_file", help="Edge-list file ('n m' header, then 'i j' lines)")
        if name == "brute":
            cmd.add_argument("--method", choices=["power", "lanczos"], default="power")
        else:
            cmd.add_argument("--export", default=None, help="Also write the spectrum to this file")

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--checks", default="tripartite",
                        help=f"Comma-separated subset of {','.join(VERIFY_CHECKS)}")

    lr = sub.add_parser("lr", parents=[common], help="Iterated Littlewood-Richardson coefficient")
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--factors", required=True, help="Slash-separated partitions, e.g. 2,1/3/2")
    lr.add_argument("--direct", action="store_true", help="Cross-check with the direct filling count")

    eta = sub.add_parser("eta", parents=[common], help="Clique block eigenvalue of an irrep")
    eta.add_argument("--lambda", dest="lam", required=True)
    eta.add_argument("--d", type=int, required=True)

    sweep = sub.add_parser("sweep", parents=[common], help="Value table over a range of instances")
    sweep.add_argument("--d", type=int, default=None)
    sweep.add_argument("--min-n", type=int, default=None)
    sweep.add_argument("--max-n", type=int, default=None)
    sweep.add_argument("--excel", action="store_true", help="Also export the table to the data folder")

    return parser


def config_from_args(args):
    """argparse Namespace → RunConfig (문자열 인자 파싱 포함)"""
    raw = vars(args)
    parts = raw.get("parts")
    lam = raw.get("lam")
    factors = raw.get("factors")
    checks = raw.get("checks")
    return RunConfig(
        command=args.command,
        d=raw.get("d"),
        parts=parse_parts(parts) if parts is not None else None,
        graph_file=raw.get("graph_file"),
        tol=args.tol,
        max_iters=args.max_iters,
        seed=args.seed,
        output=args.output,
        method=raw.get("method") or "power",
        lam=parse_partition(lam) if lam is not None else None,
        factors=parse_factors(factors) if factors is not None else None,
        direct=bool(raw.get("direct")),
        min_n=raw.get("min_n"),
        max_n=raw.get("max_n"),
        checks=[c.strip() for c in checks.split(",") if c.strip()] if checks else ["tripartite"],
        excel=bool(raw.get("excel")),
        export=raw.get("export"),
    )


def run(config):
    """
    RunConfig 실행 후 검증된 출력 문자열과 종료 코드 반환

    Returns:
        tuple: (stdout 문자열, 종료 코드)
    """
    result = HANDLERS[config.command](config)
    problems = validate_payload(result.payload, OUTPUT_SCHEMAS[config.command])
    if problems:
        display_error_message("Output failed schema validation: " + "; ".join(problems))
        return "", EXIT_CODES["computation"]
    if config.output == "json":
        return dump_payload(result.payload), result.exit_code
    return result.text, result.exit_code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CODES["usage"]

    started = time.perf_counter()
    errors = []
    try:
        config = config_from_args(args)
        output, code = run(config)
    except (DomainError, GraphParseError, StructureError, OSError) as e:
        errors.append(str(e))
        display_error_message(str(e), "Check the command-line arguments")
        code = EXIT_CODES["usage"]
    except (SizeGuardError, ConvergenceError) as e:
        errors.append(str(e))
        display_error_message(str(e), "Reduce n or d, or raise --max-iters / --tol")
        code = EXIT_CODES["computation"]
    else:
        if output:
            print(output)

    parameters = {key: value for key, value in vars(args).items() if value is not None and key != "command"}
    log_run_status(args.command, "SUCCESS" if code == EXIT_CODES["ok"] else "FAILED",
                   parameters, time.perf_counter() - started, errors)
    return code


if __name__ == "__main__":
    sys.exit(main())
