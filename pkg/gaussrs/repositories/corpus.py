from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Optional

import yaml

from gaussrs.core.config import BASE_DIR
from gaussrs.core.logger import logger
from gaussrs.schemas.corpus import CorpusFile, CorpusFunction, CorpusPair

DEFAULT_CORPUS_PATH = BASE_DIR.parent / "assets" / "corpus.yaml"


class CorpusRepository:
    """数据访问：验证语料。

    从 YAML 读取表达式列表与带解析常数的 (f, g) 组合。
    """

    def __init__(self, path: Optional[Path] = None) -> None:
        self.path = path or DEFAULT_CORPUS_PATH

    @cached_property
    def corpus(self) -> CorpusFile:
        with self.path.open("r", encoding="utf-8") as fp:
            data = yaml.safe_load(fp) or {}
        corpus = CorpusFile.model_validate(data)
        logger.debug(
            "加载语料 %s: %s 个表达式, %s 个被积函数, %s 个积分子, %s 个额外组合",
            self.path,
            len(corpus.expressions),
            len(corpus.integrands),
            len(corpus.integrators),
            len(corpus.pairs),
        )
        return corpus

    def list_expressions(self) -> list[str]:
        return list(self.corpus.expressions)

    def list_integrators(self) -> list[CorpusFunction]:
        return list(self.corpus.integrators)

    def list_pairs(self) -> list[CorpusPair]:
        """被积函数 × 积分子在 [-1, 1] 上的全部组合，再加上一般区间上的额外组合。"""
        pairs = [
            CorpusPair(
                f=f.expr,
                g=g.expr,
                identity=g.identity,
                specs_f=f.specs,
                specs_g=g.specs,
            )
            for f in self.corpus.integrands
            for g in self.corpus.integrators
        ]
        return pairs + list(self.corpus.pairs)
