from django.apps import AppConfig


class KronpowConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "kronpow"
