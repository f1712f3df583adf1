"""Формы Киллинга на G-устойчивых множествах конечных групп."""

__version__ = "0.1.0"
