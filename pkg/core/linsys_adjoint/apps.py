from django.apps import AppConfig


class LinsysAdjointConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.linsys_adjoint"
    verbose_name = "Sistemas lineales y adjuntos"
