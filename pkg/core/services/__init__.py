from .tube_target_service import TubeTargetService
from .sweep_service import SweepService

__all__ = ['TubeTargetService', 'SweepService']
