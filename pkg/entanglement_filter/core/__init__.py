"""Numerical core: linear algebra, states, channels and calculators"""
