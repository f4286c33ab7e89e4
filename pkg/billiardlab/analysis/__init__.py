from .peaks import detect_peaks, largest_return
from .regions import probability_regions

__all__ = ["detect_peaks", "largest_return", "probability_regions"]
