"""
surfnav command-line application.
"""
