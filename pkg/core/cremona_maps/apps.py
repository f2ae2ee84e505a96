from django.apps import AppConfig


class CremonaMapsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.cremona_maps"
    verbose_name = "Transformaciones de Cremona"
