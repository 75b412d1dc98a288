from logos.cli.app import app
__all__ = ["app"]
