import environ
from pathlib import Path

# Set the base directory of the project.
BASE_DIR = Path(__file__).resolve().parent.parent


environ.Env.read_env(BASE_DIR / ".env")

env = environ.Env(DEBUG=(bool, False))

# Only used by Django internals; nothing here is served over HTTP.
SECRET_KEY = env("SECRET_KEY", default="bivariate-development-key")

DEBUG = env("DEBUG")

ALLOWED_HOSTS = []

# Define the applications used in this Django project.
INSTALLED_APPS = [
    # Django Core Apps
    "django.contrib.contenttypes",
    # Third-party Apps
    "rest_framework",
    # Custom Apps
    "polycore",
    "kronpow",
    "diffcalc",
    "pearson",
    "moments",
    "rodrigues",
    "catalog",
    "cli",
]

# Database configuration. Stores user-defined family documents only.
DATABASES = {
    "default": env.db(
        "DATABASE_URL", default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}"
    ),
}

# Internationalization settings.
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = True
USE_TZ = True

# Default primary key field type.
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Engine configuration, overridable per run from the command line.
BIVARIATE = {
    "DEFAULT_MAX_DEGREE": env.int("BIVARIATE_DEFAULT_MAX_DEGREE", default=3),
    "CAP_MARGIN": env.int("BIVARIATE_CAP_MARGIN", default=2),
    "WORKERS": env.int("BIVARIATE_WORKERS", default=1),
    "DISTRIBUTIONAL_WINDOW": env.int("BIVARIATE_DISTRIBUTIONAL_WINDOW", default=2),
}

# Django REST Framework settings. Serializers only, no authentication.
REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "UNAUTHENTICATED_USER": None,
}

# Logging configuration.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {name} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        # "file": {
        #     "class": "logging.FileHandler",
        #     "filename": env("DJANGO_LOG_FILE"),
        #     "level": env("DJANGO_LOG_LEVEL"),
        #     "formatter": "verbose",
        # },
        "console": {
            "level": env("DJANGO_LOG_LEVEL", default="INFO"),
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "": {
            "handlers": ["console"],
            "level": env("DJANGO_LOG_LEVEL", default="INFO"),
            "propagate": True,
        },
    },
}
