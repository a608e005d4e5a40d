from django import forms
from django.core.exceptions import ValidationError

from algebra.exceptions import BadIndex

from .engine import ENGINES
from .yd import INDEX_NAMES, normalize_indices

FAMILY_CHOICES = [(tag, tag) for tag in INDEX_NAMES]
INDEX_FIELDS = ("i", "j", "k", "p", "s", "t")


class FamilyIndicesForm(forms.Form):
    """Семейство модулей Йеттера-Дринфельда и его индексы"""

    family = forms.ChoiceField(choices=FAMILY_CHOICES, label="Семейство")
    i = forms.IntegerField(required=False, label="i")
    j = forms.IntegerField(required=False, label="j")
    k = forms.IntegerField(required=False, label="k")
    p = forms.IntegerField(required=False, label="p")
    s = forms.IntegerField(required=False, label="s")
    t = forms.IntegerField(required=False, label="t")
    lax = forms.BooleanField(required=False, label="Без проверки списка классификации")

    def __init__(self, *args, params=None, **kwargs):
        super().__init__(*args, **kwargs)
        self.params = params

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        tag = cleaned_data["family"]
        raw = {name: cleaned_data.get(name) for name in INDEX_FIELDS if name in INDEX_NAMES[tag]}
        extra = [name for name in INDEX_FIELDS if name not in INDEX_NAMES[tag] and cleaned_data.get(name) is not None]
        if extra:
            raise ValidationError(f"Семейство {tag} не использует индексы: {', '.join(extra)}")
        if self.params is not None:
            try:
                raw = normalize_indices(tag, self.params, raw)
            except BadIndex as exc:
                raise ValidationError(exc.message)
        cleaned_data["indices"] = raw
        return cleaned_data


class EngineOptionsForm(forms.Form):
    """Параметры вычисления размерностей по степеням"""

    kmax = forms.IntegerField(min_value=0, label="Максимальная степень")
    engine = forms.ChoiceField(choices=[(e, e) for e in ENGINES], initial="exact", label="Движок")
    seed = forms.IntegerField(min_value=0, required=False, label="Номер простого")
    primes = forms.IntegerField(min_value=1, max_value=4, required=False, label="Число простых")
    sketch = forms.CharField(required=False, label="Степени для скетчей")
    sketch_size = forms.IntegerField(min_value=1, required=False, label="Размер скетча")

    def clean_sketch(self):
        value = (self.cleaned_data.get("sketch") or "").strip()
        if not value:
            return []
        try:
            degrees = sorted({int(part) for part in value.split(",")})
        except ValueError:
            raise ValidationError("Степени скетчей задаются списком целых чисел через запятую")
        if any(d < 2 for d in degrees):
            raise ValidationError("Степень скетча должна быть не меньше 2")
        return degrees

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        cleaned_data["seed"] = cleaned_data.get("seed") or 0
        cleaned_data["primes"] = cleaned_data.get("primes") or (2 if cleaned_data["engine"] == "modular" else 1)
        cleaned_data["sketch_size"] = cleaned_data.get("sketch_size") or 64
        if cleaned_data["engine"] == "exact" and cleaned_data["primes"] > 1:
            raise ValidationError("Несколько простых имеют смысл только для модульного движка")
        return cleaned_data
