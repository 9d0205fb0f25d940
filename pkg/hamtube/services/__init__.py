from .model_builder import ModelBuilder
from .gamma_service import GammaService
from .tube_service import HamiltonianTubeService
from .inversion_service import TubeInversionService
from .bates_lerman_service import BatesLermanService

__all__ = [
    'ModelBuilder',
    'GammaService',
    'HamiltonianTubeService',
    'TubeInversionService',
    'BatesLermanService',
]
