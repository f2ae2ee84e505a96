from django.apps import AppConfig


class CurveModelConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.curve_model"
    verbose_name = "Curvas planas"
