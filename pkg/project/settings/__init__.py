"""Settings package entrypoint.

By default we expose development settings so existing references to
`DJANGO_SETTINGS_MODULE='project.settings'` keep working for manage.py and
scripts. Tests point `DJANGO_SETTINGS_MODULE` at `project.settings.test`.
"""

from .development import *  # noqa
