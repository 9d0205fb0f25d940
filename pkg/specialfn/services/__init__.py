from .special_function_service import SpecialFunctionService
from .moser_service import MoserService

__all__ = ['SpecialFunctionService', 'MoserService']
