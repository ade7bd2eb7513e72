"""Code-family generators and the Hermitian LCD enumeration"""

from .base import ConstructionReport, FamilyParams, bch_generator
from .hop import HopGenerator, construct_hop
from .primitive import PrimitiveGenerator, construct_g1
from .quaternary import QuaternaryGenerator, construct_g2
from .enumeration import all_cyclic_codes, all_hlcd_length_predicate, enumerate_hlcd
