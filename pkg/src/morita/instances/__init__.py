from .finset import FinFunction, FinSetDisjoint, FinSetObj, finfunction, finset_disjoint, finset_obj
from .finvect import FinVect, MatrixMor, finvect, matrix
from .combinators import (OpMor, OppositeInstance, ProdMor, ProductInstance,
                          opposite_instance, product_instance)

__all__ = [
    "FinFunction", "FinSetDisjoint", "FinSetObj", "finfunction", "finset_disjoint",
    "finset_obj", "FinVect", "MatrixMor", "finvect", "matrix",
    "OpMor", "OppositeInstance", "ProdMor", "ProductInstance",
    "opposite_instance", "product_instance",
]
