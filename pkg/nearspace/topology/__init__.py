from .enumeration import brute_force_topologies, count_topologies, enumerate_topologies
from .space import FiniteSpace, build_space

__all__ = ["FiniteSpace", "build_space", "enumerate_topologies", "brute_force_topologies", "count_topologies"]
