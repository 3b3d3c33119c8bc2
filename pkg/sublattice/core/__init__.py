"""Core module initialization."""

from sublattice.core.config import Settings, settings

__all__ = ["settings", "Settings"]
