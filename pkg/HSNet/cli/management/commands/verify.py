"""
Check the closed forms and the optimal designs against exhaustive search.

Usage:
    python manage.py verify --n-max 7 [--family identity --family square] [--beta 0,1/2,1,2,5,50]
    python manage.py verify --n-max 8 --long --record
    python manage.py verify --n-max 5 --mutate     # harness self-test, must exit 1

The grid starts at n = 4. There two disjoint edges tie the optimal path, so
no_small_components passes as a known tie and the cell is listed on stderr.
"""
from django.core.management.base import CommandError
from django.utils import timezone

from cli.base import CHECK_FAILURE, HsnetCommand
from cli.forms import parse_beta_grid, utility_form
from cli.reporting import VERIFY_SUMMARY_COLUMNS, to_csv, to_json, verify_summary_rows, write_file
from oracle.services import record_run, verify_grid

DEFAULT_FAMILIES = ("identity", "square")
DEFAULT_BETAS = "0,1/2,1,2,5,50"
DEFAULT_N_MIN = 4
DEFAULT_N_MAX = 5


class Command(HsnetCommand):
    help = "Exhaustive verification of values and structure over an (n, utility, beta) grid"
    command_name = "verify"

    def add_arguments(self, parser):
        parser.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Largest n (7 without --long)")
        parser.add_argument("--n-min", type=int, help=f"Smallest n (default {DEFAULT_N_MIN} or --n-max if lower)")
        parser.add_argument("--long", action="store_true", help="Allow n up to the enumeration bound")
        parser.add_argument("--mutate", action="store_true", help="Perturb the closed form; the run must fail")
        parser.add_argument("--record", action="store_true", help="Store the run in the history database")
        parser.add_argument("--workers", type=int, help="Worker processes (capped by HSNET_THREADS)")
        parser.add_argument("--summary", help="Also write a per-cell CSV summary to this file")
        self.add_utility_arguments(parser, grid=True)
        self.add_output_arguments(parser)

    def utility_grid(self, options) -> list:
        if options["utility"]:
            specs = [utility_form(options).spec()]
        else:
            specs = [
                utility_form({**options, "family": family, "beta": "0"}).spec()
                for family in options["family"] or DEFAULT_FAMILIES
            ]
        if options["utility"] and not options["beta"]:
            return specs
        betas = parse_beta_grid(options["beta"] or DEFAULT_BETAS)
        return [spec.with_beta(beta) for spec in specs for beta in betas]

    def run(self, options):
        n_max = options["n_max"]
        config = self.run_config(
            n_min=options["n_min"] or min(DEFAULT_N_MIN, n_max),
            n_max=n_max,
            long=options["long"],
            output=options["output"],
            format=options["format"],
        )
        grid = self.utility_grid(options)
        n_values = list(range(config["n_min"], config["n_max"] + 1))
        started_at = timezone.now()
        self.stderr.write(f"Verifying n={n_values[0]}..{n_values[-1]} over {len(grid)} utilities")

        summary = verify_grid(n_values, grid, workers=options["workers"], mutate=options["mutate"])
        cells = [report.to_dict() for report in summary.reports]
        data = {
            "n_min": n_values[0],
            "n_max": n_values[-1],
            "mutated": summary.mutated,
            "cells": cells,
            "grid_checks": [check.to_dict() for check in summary.grid_checks],
            "passed": summary.passed,
        }
        self.emit(to_json(data), config["output"], "verification report")
        if options["summary"]:
            write_file(options["summary"], to_csv(verify_summary_rows(cells), VERIFY_SUMMARY_COLUMNS))
        if options["record"]:
            run = record_run(summary, "; ".join(u.label for u in grid)[:500], started_at=started_at)
            self.stderr.write(f"Recorded run {run.id}")

        for report in summary.reports:
            for check in report.known_ties():
                message = f"n={report.n} {report.utility.label}: {check.name}: {check.detail}"
                self.stderr.write(self.style.WARNING(message))

        failed = [r for r in summary.reports if not r.passed]
        if not summary.passed:
            for report in failed:
                names = ", ".join(c.name for c in report.failed_checks())
                self.stderr.write(self.style.ERROR(f"n={report.n} {report.utility.label}: {names}"))
            for check in summary.grid_checks:
                if not check.passed:
                    self.stderr.write(self.style.ERROR(f"{check.name}: {check.detail}"))
            raise CommandError(
                f"{len(failed)} of {len(summary.reports)} cells failed verification", returncode=CHECK_FAILURE
            )
        self.stderr.write(self.style.SUCCESS(f"All {len(summary.reports)} cells passed"))
