from django.apps import AppConfig


class DiffcalcConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "diffcalc"
