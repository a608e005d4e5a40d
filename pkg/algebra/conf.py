from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "FORGE_CYCLOTOMIC_ORDER_CAP": 100_000,
    "FORGE_HOPF_AUDIT_BOUND": 256,
    "FORGE_EXACT_RANK_BOUND": 4096,
    "FORGE_DENSE_COLUMN_THRESHOLD": 512,
    "FORGE_SYMMETRIZER_DIM_BOUND": 4096,
    "FORGE_SYMMETRIZER_PERM_BOUND": 5040,
    "FORGE_BOXTIMES_BOUND": 4096,
    "FORGE_TYPE_D_EXHAUSTIVE_CAP": 12,
    "FORGE_PRIME_FLOOR": 2**20,
    "FORGE_PRIME_SEARCH_CAP": 200_000,
    "FORGE_RECORD_RUNS": True,
    "FORGE_TOOL_VERSION": "1.0.0",
}


def bound(name: str):
    """Return a FORGE_* setting, falling back to the built-in default.

    Library code may run without a configured Django project (plain imports
    in a notebook, say), so ImproperlyConfigured is treated as "use default".
    """
    try:
        return getattr(settings, name, DEFAULTS[name])
    except ImproperlyConfigured:
        return DEFAULTS[name]
