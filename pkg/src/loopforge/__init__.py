"""Finite loop analysis: Cayley tables, multiplication groups, isotopy and Bruck loops."""
from .datasets import builtin
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .permgrp import PermGroup, Permutation, group_from_generators
from .structure import SubloopSet
from .tableloop import LoopTable, load_table, property_flags
from .tablefile import parse_table_file
from .twisted import GroupTable, t_half

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GroupTable",
    "LoopTable",
    "PermGroup",
    "Permutation",
    "SubloopSet",
    "builtin",
    "group_from_generators",
    "load_table",
    "parse_table_file",
    "property_flags",
    "t_half",
]
