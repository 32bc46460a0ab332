"""Validation of command-line argument sets."""
from __future__ import annotations

from pathlib import Path
from typing import Mapping

from django import forms
from django.conf import settings
from django.core.exceptions import ValidationError

from payoff_engine.forms import UtilitySpecForm
from payoff_engine.rationals import parse_rational
from payoff_engine.utilities import UtilitySpec

COMMANDS = ("solve", "design", "value_table", "verify", "enumerate", "export")

# First entry is the default.
FORMATS = {
    "solve": ("json",),
    "design": ("json", "dot"),
    "value_table": ("csv", "json"),
    "verify": ("json",),
    "enumerate": ("json",),
    "export": ("json", "dot", "text"),
}


class RunConfigForm(forms.Form):
    """
    One command invocation. `clean()` checks the inputs each command needs
    and resolves the output format.
    """

    command = forms.ChoiceField(choices=[(c, c) for c in COMMANDS])
    graph_path = forms.CharField(required=False)
    n = forms.IntegerField(required=False, min_value=0)
    s = forms.IntegerField(required=False, min_value=0)
    m = forms.IntegerField(required=False, min_value=0)
    n_min = forms.IntegerField(required=False, min_value=1)
    n_max = forms.IntegerField(required=False, min_value=1)
    long = forms.BooleanField(required=False)
    output = forms.CharField(required=False)
    format = forms.CharField(required=False)

    def clean_graph_path(self):
        path = self.cleaned_data.get("graph_path")
        if path and not Path(path).is_file():
            raise ValidationError("Graph file %(path)s does not exist", code="graph_format", params={"path": path})
        return path

    def clean(self):
        cleaned_data = super().clean()
        command = cleaned_data.get("command")
        if not command:
            return cleaned_data

        allowed = FORMATS[command]
        fmt = cleaned_data.get("format") or allowed[0]
        if fmt not in allowed:
            self.add_error("format", f"{command} writes {', '.join(allowed)}, not {fmt}")
        cleaned_data["format"] = fmt

        if command in ("solve", "export") and not cleaned_data.get("graph_path"):
            self.add_error("graph_path", f"{command} needs a graph file")
        if command in ("design", "enumerate") and cleaned_data.get("n") is None:
            self.add_error("n", f"{command} needs --n")
        if command == "design" and cleaned_data.get("n") == 0:
            self.add_error("n", "design needs at least one node")
        if command == "enumerate" and (cleaned_data.get("n") or 0) > settings.HSNET_ENUMERATION_BOUND:
            self.add_error("n", f"enumeration is limited to n <= {settings.HSNET_ENUMERATION_BOUND}")
        if command in ("value_table", "verify"):
            self._clean_range(cleaned_data, command)
        return cleaned_data

    def _clean_range(self, cleaned_data, command):
        n_min, n_max = cleaned_data.get("n_min"), cleaned_data.get("n_max")
        if n_max is None:
            self.add_error("n_max", f"{command} needs --n-max")
            return
        if n_min is not None and n_min > n_max:
            self.add_error("n_min", f"--n-min {n_min} exceeds --n-max {n_max}")
        if command == "verify":
            limit = settings.HSNET_ENUMERATION_BOUND if cleaned_data.get("long") else settings.HSNET_DEFAULT_MAX_N
            if n_max > limit:
                hint = "" if cleaned_data.get("long") else " (use --long to go further)"
                self.add_error("n_max", f"verify is limited to n <= {limit}{hint}")

    def config(self) -> dict:
        """
        Raises:
            ValidationError: carrying every field error
        """
        if not self.is_valid():
            raise ValidationError(self.errors.as_text(), code="usage")
        return self.cleaned_data


def _read_utility_json(text: str) -> str:
    if not text.startswith("@"):
        return text
    try:
        return Path(text[1:]).read_text()
    except OSError as exc:
        raise ValidationError("Cannot read utility file %(path)s", code="utility", params={"path": text[1:]}) from exc


def utility_form(options: Mapping) -> UtilitySpecForm:
    """--utility (JSON text or @path) wins over the flat family flags."""
    if options.get("utility"):
        return UtilitySpecForm.from_json(_read_utility_json(options["utility"]))
    return UtilitySpecForm(
        data={
            "family": options.get("family") or "identity",
            "slope": options.get("slope") or "",
            "gamma": options.get("gamma") or "",
            "values": options.get("table") or "",
            "beta": options.get("beta") or "0",
        }
    )


def utility_from_options(options: Mapping) -> UtilitySpec:
    spec = utility_form(options).spec()
    if options.get("utility") and options.get("beta"):
        spec = spec.with_beta(options["beta"])
    return spec


def parse_beta_grid(text: str) -> list:
    """Comma separated betas, e.g. "0,1/2,1"."""
    betas = [parse_rational(part, "beta") for part in text.split(",") if part.strip()]
    if not betas:
        raise ValidationError("beta grid is empty", code="usage")
    return sorted(set(betas))
