from django.apps import AppConfig


class PluckerConfig(AppConfig):
    name = "plucker"
    verbose_name = "Django Plucker"

    def ready(self):
        """
        Initialize the app by validating the Plucker settings.
        """
        from plucker.settings import check_settings

        check_settings()
