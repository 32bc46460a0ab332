"""
The `hsnet` console script.

Dispatches to the Django management commands, accepting hyphenated command
names (`hsnet value-table ...`) as well as the underscored module names.
"""
import os
import sys

ALIASES = {
    "value-table": "value_table",
}


def normalize_argv(argv: list[str]) -> list[str]:
    if len(argv) > 1 and argv[1] in ALIASES:
        return [argv[0], ALIASES[argv[1]], *argv[2:]]
    return list(argv)


def run_from_argv(argv: list[str]) -> None:
    from django.core.management import execute_from_command_line

    execute_from_command_line(normalize_argv(argv))


def main() -> None:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "HSNet.settings")
    run_from_argv(sys.argv)
