from django import forms
from django.core.exceptions import ValidationError

from .exceptions import BadIndex
from .suzuki import SuzukiParams

SIGN_CHOICES = [("+", "+1"), ("-", "-1")]


class SuzukiParamsForm(forms.Form):
    """Параметры алгебры A_{N,2n}^{mu lambda}"""

    N = forms.IntegerField(min_value=1, label="N")
    n = forms.IntegerField(min_value=1, label="n")
    mu = forms.ChoiceField(choices=SIGN_CHOICES, initial="+", label="mu")
    lam = forms.ChoiceField(choices=SIGN_CHOICES, initial="+", label="lambda")

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        try:
            cleaned_data["params"] = SuzukiParams.from_flags(
                cleaned_data["N"], cleaned_data["n"], cleaned_data["mu"], cleaned_data["lam"]
            )
        except BadIndex as exc:
            raise ValidationError(exc.message)
        return cleaned_data
