import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "cremona_kit.settings")
django.setup()
