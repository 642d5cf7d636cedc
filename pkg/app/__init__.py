"""
P⁴中光滑曲面的精确数值计算包
"""

__version__ = "1.0.0"
