# exact_algebra/apps.py
from django.apps import AppConfig


class ExactAlgebraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.exact_algebra"
    verbose_name = "Aritmética exacta"
