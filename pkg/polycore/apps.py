from django.apps import AppConfig


class PolycoreConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "polycore"
