"""
This package classifies sites into theoretical, technical and exploitable
potential using infrastructure proximity and protected areas.
"""
