"""
Django settings for the HSNet project.

HSNet computes equilibria of the hider-seeker network design game. Django
provides the configuration layer, the management-command CLI, form-based
input validation and a small ORM store for verification run history.

Configuration is read from the environment (and a project-root .env file):

    HSNET_THREADS            worker processes for the graph oracle (default 1)
    HSNET_ENUMERATION_BOUND  largest n the enumerator accepts (default 8)
    HSNET_DEFAULT_MAX_N      largest n `verify` runs without --long (default 7)
    HSNET_LOG_LEVEL          root log level (default INFO)
    HSNET_DB_PATH            SQLite file for run history
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
# Load environment variables from project root .env if present
load_dotenv(BASE_DIR / ".env")


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY", "hsnet-insecure-local-key")

DEBUG = os.getenv("DJANGO_DEBUG", "false").lower() == "true"

ALLOWED_HOSTS = [
    "127.0.0.1",
    "localhost",
]


# Application definition

INSTALLED_APPS = [
    "django.contrib.admin",
    "django.contrib.auth",
    "django.contrib.contenttypes",
    "django.contrib.sessions",
    "django.contrib.messages",
    "django.contrib.staticfiles",
    "graph_core",
    "payoff_engine",
    "matrix_game",
    "closed_form",
    "designer",
    "oracle",
    "cli",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.contrib.sessions.middleware.SessionMiddleware",
    "django.middleware.common.CommonMiddleware",
    "django.middleware.csrf.CsrfViewMiddleware",
    "django.contrib.auth.middleware.AuthenticationMiddleware",
    "django.contrib.messages.middleware.MessageMiddleware",
    "django.middleware.clickjacking.XFrameOptionsMiddleware",
]

ROOT_URLCONF = "HSNet.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.request",
                "django.contrib.auth.context_processors.auth",
                "django.contrib.messages.context_processors.messages",
            ],
        },
    },
]


# Database
# Only verification run history is stored; SQLite is enough.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": os.getenv("HSNET_DB_PATH", str(BASE_DIR / "hsnet.sqlite3")),
    }
}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True


STATIC_URL = "static/"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# ---- Game engine ----
HSNET_THREADS = max(1, int(os.getenv("HSNET_THREADS", "1")))
HSNET_ENUMERATION_BOUND = int(os.getenv("HSNET_ENUMERATION_BOUND", "8"))
HSNET_DEFAULT_MAX_N = int(os.getenv("HSNET_DEFAULT_MAX_N", "7"))
# Exhaustive support checks over all optimal hider strategies are limited to tiny n
HSNET_SUPPORT_CHECK_MAX_N = 6


# ---- Logging ----
HSNET_LOG_LEVEL = os.getenv("HSNET_LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": HSNET_LOG_LEVEL,
    },
    "loggers": {
        "matrix_game": {"level": HSNET_LOG_LEVEL},
        "oracle": {"level": HSNET_LOG_LEVEL},
        "designer": {"level": HSNET_LOG_LEVEL},
        "django": {"level": "WARNING"},
    },
}
