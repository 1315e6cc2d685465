from django.apps import AppConfig


class RodriguesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "rodrigues"
