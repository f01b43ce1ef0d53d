"""Character-theory workbench for small finite groups of Lie type."""

__version__ = "0.1.0"
