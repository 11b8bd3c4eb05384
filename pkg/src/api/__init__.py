"""API Package - FastAPI Routes"""
from .routes import router, create_app

__all__ = ["router", "create_app"]
