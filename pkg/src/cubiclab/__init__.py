"""cubiclab - Cubic Incidence Lab

Exact point/cubic-curve incidence experiments over prime fields.
"""

__version__ = "0.1.0"
