"""
utils - logging setup and the settings file
"""
