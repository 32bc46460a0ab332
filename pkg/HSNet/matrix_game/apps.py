from django.apps import AppConfig


class MatrixGameConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "matrix_game"
    verbose_name = "Zero-sum matrix games"
