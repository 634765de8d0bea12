"""
This package attaches climate and streamflow characteristics to sites and
summarises them per scheme and elevation band.
"""
