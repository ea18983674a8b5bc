"""
Exact independence numbers, maximum independent sets and vertex covers of the
pseudofractal scale-free web and the Sierpinski gasket.
"""

__version__ = "0.1.0"
