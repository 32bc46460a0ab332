from django.apps import AppConfig


class ClosedFormConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "closed_form"
    verbose_name = "Closed-form equilibrium values"
