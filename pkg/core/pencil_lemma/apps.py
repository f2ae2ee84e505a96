from django.apps import AppConfig


class PencilLemmaConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "core.pencil_lemma"
    verbose_name = "Pinceles racionales y séxticas nodales"
