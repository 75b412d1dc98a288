from logos.utils.config import Settings, settings
from logos.utils.logging import get_logger

__all__ = ["settings", "Settings", "get_logger"]
