"""HTTP service: FastAPI app factory and configuration."""

from thermobase.service.app import create_app
from thermobase.service.config import ServiceConfig

__all__ = ["ServiceConfig", "create_app"]
