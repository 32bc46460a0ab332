"""
Tabulate the closed forms T, A, B, rho, lambda_S, Q and Qbar.

Usage:
    python manage.py value_table --n-min 4 --n-max 12 --family square --beta 1
    hsnet value-table --n-max 10
"""
from cli.base import HsnetCommand
from cli.reporting import to_csv, to_json
from closed_form.selectors import VALUE_TABLE_COLUMNS, value_table_rows


class Command(HsnetCommand):
    help = "Closed-form values per (n, s, m) as CSV"
    command_name = "value_table"

    def add_arguments(self, parser):
        parser.add_argument("--n-min", type=int, help="Smallest n (default: --n-max)")
        parser.add_argument("--n-max", type=int, required=True, help="Largest n")
        parser.add_argument("--m", type=int, help="Only rows with this many periphery nodes")
        self.add_utility_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        config = self.run_config(
            n_min=options["n_min"],
            n_max=options["n_max"],
            m=options["m"],
            output=options["output"],
            format=options["format"],
        )
        u = self.utility(options)
        n_min = config["n_min"] or config["n_max"]
        rows = value_table_rows(range(n_min, config["n_max"] + 1), u)
        if config["m"] is not None:
            rows = [row for row in rows if row["m"] == str(config["m"])]

        if config["format"] == "json":
            data = {"utility": u.to_dict(), "columns": list(VALUE_TABLE_COLUMNS), "rows": rows}
            if not u.exact:
                data["float"] = True
            text = to_json(data)
        else:
            text = to_csv(rows, VALUE_TABLE_COLUMNS)
        self.emit(text, config["output"], f"{len(rows)} rows")
