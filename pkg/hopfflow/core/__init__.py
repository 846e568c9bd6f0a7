"""Core exceptions shared by every module."""
