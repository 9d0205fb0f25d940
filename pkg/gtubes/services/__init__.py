from .momentum_service import MomentumService
from .simple_tube_service import SimpleTubeService
from .restricted_tube_service import RestrictedTubeService

__all__ = ['MomentumService', 'SimpleTubeService', 'RestrictedTubeService']
