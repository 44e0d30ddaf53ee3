"""Exact-arithmetic cohomology of finite categories with natural-system
coefficients, with machine-verified chain-level functoriality and
(co)localization transport."""

__version__ = "0.1.0"
