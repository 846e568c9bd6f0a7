from hopfflow.config.settings import settings, Settings

__all__ = ["settings", "Settings"]
