"""Cyclic codes, distance engines and orthogonal direct sum masking"""

from .cyclic import CyclicCode, from_defining_set, from_generator, is_hermitian_lcd
from .distance import DistanceReport, WeightEnumerator, min_distance
from .odsm import OdsmInstance, setup
