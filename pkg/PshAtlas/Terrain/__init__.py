"""
This package derives terrain products from the DEM: percent slope,
flat-land reservoir candidates and elevation samples.
"""
