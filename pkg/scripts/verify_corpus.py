"""Verify every rigorous error bound against the actual error over the corpus.

Usage examples:
  uv run python scripts/verify_corpus.py
  uv run python scripts/verify_corpus.py --corpus-path assets/corpus.yaml --tol 1e-9

For each (f, g, [a, b]) pair the script builds a full bound report with the
analytically declared constants, prints one row per pair and exits with
status 1 when any rigorous bound is exceeded by the actual error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

ROOT_PATH = Path(__file__).resolve().parents[1]
if str(ROOT_PATH) not in sys.path:
    sys.path.insert(0, str(ROOT_PATH))

from gaussrs.core.logger import logger  # noqa: E402
from gaussrs.repositories.corpus import CorpusRepository  # noqa: E402
from gaussrs.schemas.run import ReportOptions  # noqa: E402
from gaussrs.services.report_service import BoundReportService  # noqa: E402


def verify(corpus_path: Path, tol: float) -> int:
    repo = CorpusRepository(corpus_path)
    service = BoundReportService()
    violated = 0
    started = time.perf_counter()
    for pair in repo.list_pairs():
        f, g = pair.functions()
        options = ReportOptions(tol=tol, with_oracle=True, identity_g=pair.identity, estimate_constants=False)
        report = service.build_report(f, g, pair.interval(), pair.specs_f, pair.specs_g, options)
        rigorous = [e for e in report.bounds if e.rigorous]
        tightest = min((e.bound_value for e in rigorous if e.bound_value is not None), default=None)
        bad = report.violations()
        violated += len(bad)
        status = "FAIL " + ",".join(e.theorem_id for e in bad) if bad else "ok"
        print(
            f"{pair.label:<48} error={report.actual_error:<12.6g} "
            f"tightest={'-' if tightest is None else f'{tightest:.6g}':<12} rigorous={len(rigorous)} {status}"
        )
    logger.info("语料验证完成，用时 %.1fs", time.perf_counter() - started)
    return 1 if violated else 0


def parse_args() -> argparse.Namespace:
    p = argparse.ArgumentParser(description="在验证语料上检查严格误差界是否覆盖实际误差")
    p.add_argument(
        "--corpus-path",
        type=str,
        default=str(ROOT_PATH / "assets" / "corpus.yaml"),
        help="语料文件路径 (默认为 assets/corpus.yaml)",
    )
    p.add_argument("--tol", type=float, default=1e-10, help="内层积分与参照值的容限")
    return p.parse_args()


def main() -> None:
    args = parse_args()
    sys.exit(verify(Path(args.corpus_path), args.tol))


if __name__ == "__main__":  # pragma: no cover
    main()
