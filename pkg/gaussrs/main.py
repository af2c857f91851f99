import sys

import click

from gaussrs.api.cli import EXIT_USAGE, cli


def main() -> None:
    """控制台入口；click 的用法错误统一映射为退出码 1。"""
    try:
        code = cli.main(standalone_mode=False)
    except click.exceptions.Exit as exc:
        code = exc.exit_code
    except click.ClickException as exc:
        exc.show()
        code = EXIT_USAGE
    except click.Abort:
        code = EXIT_USAGE
    sys.exit(code or 0)


if __name__ == "__main__":
    main()
