"""Input validation for utility specifications."""
import json

from django import forms
from django.core.exceptions import ValidationError

from .utilities import ALIASES, FAMILIES, UtilitySpec, builtin_utilities

FAMILY_CHOICES = [(f, f) for f in FAMILIES] + [(a, a) for a in ALIASES]


class UtilitySpecForm(forms.Form):
    """
    Accepts flat fields (family, slope, gamma, values, beta) and cleans them
    into a UtilitySpec. `from_json` maps the documented JSON document
    {"family", "params", "beta"} onto these fields.
    """

    family = forms.ChoiceField(choices=FAMILY_CHOICES)
    slope = forms.CharField(required=False)
    gamma = forms.CharField(required=False)
    values = forms.CharField(required=False, help_text="Comma separated f(0), f(1), ...")
    beta = forms.CharField(required=False, initial="0")

    @classmethod
    def from_json(cls, text: str) -> "UtilitySpecForm":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError("Utility JSON is malformed: %(err)s", code="utility", params={"err": exc.msg})
        if not isinstance(data, dict):
            raise ValidationError("Utility JSON must be an object", code="utility")
        params = data.get("params") or {}
        values = params.get("values")
        return cls(
            data={
                "family": data.get("family", ""),
                "slope": params.get("slope", ""),
                "gamma": params.get("gamma", ""),
                "values": ",".join(str(v) for v in values) if values else "",
                "beta": data.get("beta", "0"),
            }
        )

    def clean(self):
        cleaned_data = super().clean()
        family = cleaned_data.get("family")
        if not family:
            return cleaned_data
        params = {}
        for key in ("slope", "gamma"):
            if cleaned_data.get(key):
                params[key] = cleaned_data[key]
        if cleaned_data.get("values"):
            params["values"] = [v.strip() for v in cleaned_data["values"].split(",") if v.strip()]
        cleaned_data["spec"] = builtin_utilities(family, params, beta=cleaned_data.get("beta") or "0")
        return cleaned_data

    def spec(self) -> UtilitySpec:
        """
        Raises:
            ValidationError: carrying every field error
        """
        if not self.is_valid():
            raise ValidationError(self.errors.as_text(), code="utility")
        return self.cleaned_data["spec"]
