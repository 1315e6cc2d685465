from django.apps import AppConfig


class PearsonConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "pearson"
