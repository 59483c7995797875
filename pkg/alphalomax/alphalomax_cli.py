#!/usr/bin/env python3
import sys
from typing import List

import click

from alphalomax.src.api_endpoints.terminal_api.method_terminal_api_endpoints import method_terminal_commands


@click.group()
def cli():
    pass


cli.add_command(method_terminal_commands.eval_command)
cli.add_command(method_terminal_commands.metrics)
cli.add_command(method_terminal_commands.simulate)
cli.add_command(method_terminal_commands.sample)
cli.add_command(method_terminal_commands.fit)
cli.add_command(method_terminal_commands.validate)


def run(argv: List[str] = None) -> int:
    """Runs one subcommand and returns its exit code instead of leaving the interpreter."""
    try:
        cli.main(args=argv, prog_name='alphalomax', standalone_mode=True)
    except SystemExit as e:
        if e.code is None:
            return 0
        if isinstance(e.code, int):
            return e.code
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(run())
