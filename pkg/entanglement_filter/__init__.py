"""
entanglement-filter

Single local filtering of 3-qubit pure states (W, GHZ, W-Wbar), depolarizing
noise on qubit subsets, and pairwise concurrence/purity measures.
"""

__version__ = "1.0.0"
