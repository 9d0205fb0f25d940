from .splitting_service import SplittingService
from .slice_service import SliceService
from .serialization import SplittingSerializer

__all__ = ['SplittingService', 'SliceService', 'SplittingSerializer']
