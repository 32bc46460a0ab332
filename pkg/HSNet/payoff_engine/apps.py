from django.apps import AppConfig


class PayoffEngineConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "payoff_engine"
    verbose_name = "Payoff engine"
