from django.apps import AppConfig


class JonquieresConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.jonquieres"
    verbose_name = "Grupo de de Jonquières"
