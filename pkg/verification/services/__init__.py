from .fd_service import FiniteDifferenceService, map_points
from .chart_service import TubeChartService
from .suite_service import VerificationSuiteService, random_group_element, sample_ball

__all__ = [
    'FiniteDifferenceService',
    'map_points',
    'TubeChartService',
    'VerificationSuiteService',
    'random_group_element',
    'sample_ball',
]
