"""
Optimal network design for given (n, f, beta).

Usage:
    python manage.py design --n 8 --family identity --beta 2 [--s 0] [--dot PATH]
"""
from cli.base import HsnetCommand
from cli.reporting import to_json, write_file
from designer.builders import TOPOLOGIES
from designer.exports import design_to_dict, design_to_dot
from designer.services import design_for, design_optimal


class Command(HsnetCommand):
    help = "Build the equilibrium network, its strategies and the hider value"
    command_name = "design"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True, help="Number of nodes")
        parser.add_argument("--s", type=int, help="Fix the number of singletons instead of optimising it")
        parser.add_argument("--topology", choices=TOPOLOGIES, help="Force a topology (with --s)")
        parser.add_argument("--dot", help="Also write the network as DOT to this file")
        self.add_utility_arguments(parser)
        self.add_output_arguments(parser)

    def run(self, options):
        config = self.run_config(n=options["n"], s=options["s"], output=options["output"], format=options["format"])
        u = self.utility(options)
        if config["s"] is None:
            result = design_optimal(config["n"], u)
        else:
            result = design_for(config["n"], config["s"], u, topology=options["topology"])

        if config["format"] == "dot":
            self.emit(design_to_dot(result), config["output"], "design")
            return
        data = {**design_to_dict(result), "utility": u.to_dict()}
        self.emit(to_json(data), config["output"], "design")
        if options["dot"]:
            write_file(options["dot"], design_to_dot(result))
            self.stdout.write(self.style.SUCCESS(f"Wrote DOT to {options['dot']}"))
