"""Morley Verify - machine-checked derivation of the converse Morley theorem"""

__version__ = "0.1.0"
__license__ = "MIT"
