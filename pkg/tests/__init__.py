"""
Entanglement Filter Tests
"""
