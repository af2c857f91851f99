from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


BASE_DIR = Path(__file__).resolve().parent.parent


class Config(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="GAUSSRS_")

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    """控制台日志等级，CLI 的 --verbose 会临时切换为 DEBUG"""
    log_file: Optional[Path] = None
    """日志文件路径，为空时只输出到控制台"""

    # 内层 Riemann 积分（自适应 Simpson）
    default_tol: float = 1e-10
    """默认绝对误差容限，所有未显式传入 tol 的运算都使用该值"""
    simpson_max_depth: int = 50
    """自适应 Simpson 的最大细分层数"""
    simpson_min_depth: int = 3
    """子区间被接受前的最少细分层数"""
    simpson_initial_panels: int = 4
    """自适应 Simpson 的初始等分段数"""
    simpson_max_evaluations: int = 4_000_000
    """单次积分允许的被积函数求值次数上限"""

    # 参照值（oracle）
    oracle_initial_n: int = 64
    """Riemann–Stieltjes 和式的初始剖分数"""
    oracle_max_n: int = 2**22
    """Riemann–Stieltjes 和式倍增的剖分数上限"""
    variation_levels: int = 8
    """全变差估计的细化层数"""
    holder_samples: int = 512
    """Hölder 常数估计使用的低差异采样点数"""

    # 误差界
    sigma_epsilon: float = 1e-12
    """Chebyshev 泛函允许的负向舍入误差（相对 ‖h‖₂²）"""

    # 输出
    significant_digits: int = 15
    """报告中浮点数保留的有效数字位数"""
    workers: int = 1
    """复合求积并行计算子区间时使用的线程数，1 表示串行"""


config = Config()
