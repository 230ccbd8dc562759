from .model import DimClass, HereditaryModel, build_model, classify_dim, euler_matrix, g_from_dim
from .mutation import a_matrices, check_exchange_matrix, fz_mutate
from .quiver import Quiver, parse_quiver
