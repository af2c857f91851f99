import logging
from typing import Optional

import colorlog

from .config import config


def init_logger(level: Optional[str] = None) -> logging.Logger:
    # 创建logger对象
    logger = logging.getLogger("gaussrs")
    logger.setLevel(logging.DEBUG)

    # 创建控制台日志处理器（stderr，保持 stdout 只输出报告）
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level or config.log_level)

    # 定义颜色输出格式
    color_formatter = colorlog.ColoredFormatter(
        "%(log_color)s[%(levelname)s] %(message)s",
        log_colors={
            "DEBUG": "cyan",
            "INFO": "green",
            "WARNING": "yellow",
            "ERROR": "red",
            "CRITICAL": "red,bg_white",
        },
    )
    console_handler.setFormatter(color_formatter)

    # 移除默认的handler
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = False

    logger.addHandler(console_handler)

    # 创建文件日志处理器
    if config.log_file is not None:
        config.log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(config.log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter("[%(asctime)s] [%(name)s] [%(levelname)s] %(funcName)s: %(message)s")
        )
        logger.addHandler(file_handler)

    return logger


def set_log_level(level: str) -> None:
    """调整控制台处理器的日志等级，文件处理器始终记录 DEBUG。"""
    for handler in logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(level)


logger = init_logger()
