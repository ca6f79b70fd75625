"""Name-keyed registry of property checks.

The verify harness derives each instance seed from the check name, so names
are unique and every check carries a CheckMeta with a category.
"""

from typing import Type

from .core import CheckMeta, PropertyCheck
from .errors import CheckRegistrationError


class CheckRegistry:
    """Checks registered with `@CheckRegistry.register`, keyed by `meta.name`."""

    _registry: dict[str, Type[PropertyCheck]] = {}

    @classmethod
    def register(cls, klass: Type[PropertyCheck]) -> Type[PropertyCheck]:
        meta = klass.__dict__.get("meta")
        if not isinstance(meta, CheckMeta):
            raise CheckRegistrationError(klass, "class-level 'meta' must be a CheckMeta")
        if not meta.name or not meta.category:
            raise CheckRegistrationError(klass, "meta needs a name and a category")
        existing = cls._registry.get(meta.name)
        if existing is not None and existing is not klass:
            raise CheckRegistrationError(
                klass, f"name {meta.name!r} already taken by {existing.__name__}"
            )
        cls._registry[meta.name] = klass
        return klass

    @classmethod
    def get(cls, name: str) -> Type[PropertyCheck]:
        return cls._registry[name]

    @classmethod
    def list(cls) -> dict[str, Type[PropertyCheck]]:
        return dict(cls._registry)

    @classmethod
    def find_by_category(cls, category: str) -> dict[str, Type[PropertyCheck]]:
        return {
            name: klass
            for name, klass in cls._registry.items()
            if klass.meta.category == category
        }
