"""NLML record store"""

from . import store

__all__ = ['store']
