from django.apps import AppConfig


class NicholsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "nichols"
    verbose_name = "Алгебры Николса"
