"""
TESTS
"""
