from .group_registry import GroupRegistry
from .algebra_service import AlgebraService

__all__ = ['GroupRegistry', 'AlgebraService']
