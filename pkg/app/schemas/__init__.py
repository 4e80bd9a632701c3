"""
Pydantic schemas for command summaries.
"""
