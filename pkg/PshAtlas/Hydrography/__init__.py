"""
This package builds reservoir candidates from the hydrography layers:
lakes from lake polygons and on-river storage points from the river
network.
"""
