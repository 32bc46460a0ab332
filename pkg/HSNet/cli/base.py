"""
Shared plumbing for the hsnet management commands.

Exit codes: 0 on success, 1 when verification checks fail, 2 for usage,
parse and validation errors.
"""
from __future__ import annotations

import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from payoff_engine.utilities import ALIASES, FAMILIES, UtilitySpec

from .forms import FORMATS, RunConfigForm, utility_from_options
from .reporting import write_file

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILURE = 1


def validation_message(exc: ValidationError) -> str:
    return "; ".join(exc.messages)


class HsnetCommand(BaseCommand):
    """
    Subclasses set `command_name` and implement `run(config, options)`,
    returning the text to emit.
    """

    command_name = ""

    def add_utility_arguments(self, parser, grid: bool = False):
        parser.add_argument("--utility", help="Utility spec as JSON text, or @path to a JSON file")
        family_help = "Utility family or alias"
        if grid:
            parser.add_argument(
                "--family", action="append", choices=list(FAMILIES) + list(ALIASES), help=f"{family_help} (repeatable)"
            )
            parser.add_argument("--beta", help="Comma separated capture penalties, e.g. 0,1/2,1")
        else:
            parser.add_argument("--family", choices=list(FAMILIES) + list(ALIASES), help=family_help)
            parser.add_argument("--beta", help="Capture penalty, e.g. 1/2")
        parser.add_argument("--slope", help="Slope of a linear utility")
        parser.add_argument("--gamma", help="Exponent of a power or ratio_power utility")
        parser.add_argument("--table", help="Comma separated table values f(0), f(1), ...")

    def add_output_arguments(self, parser):
        formats = FORMATS[self.command_name]
        parser.add_argument("--output", "-o", help="Write to this file instead of stdout")
        parser.add_argument("--format", choices=formats, default=formats[0], help="Output format")

    def run_config(self, **fields) -> dict:
        return RunConfigForm(data={"command": self.command_name, **fields}).config()

    def utility(self, options) -> UtilitySpec:
        return utility_from_options(options)

    def emit(self, text: str, output: str | None, what: str) -> None:
        if output:
            write_file(output, text)
            self.stdout.write(self.style.SUCCESS(f"Wrote {what} to {output}"))
        else:
            self.stdout.write(text, ending="")

    def run(self, options) -> None:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            self.run(options)
        except ValidationError as exc:
            raise CommandError(validation_message(exc), returncode=USAGE_ERROR) from exc
        logger.info("%s finished", self.command_name)
