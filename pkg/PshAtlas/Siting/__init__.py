"""
This package pairs prospective reservoirs with second reservoirs and
estimates the energy storage capacity of the resulting sites.
"""
