from django.apps import AppConfig


class CoreConfig(AppConfig):
    """Excepciones compartidas, base de los comandos y corpus de ejemplos."""

    default_auto_field = "django.db.models.BigAutoField"
    name = "core"
    verbose_name = "Núcleo de cremona_kit"
