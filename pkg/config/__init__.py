"""
flagpos Configuration Module
"""
from .settings import *
