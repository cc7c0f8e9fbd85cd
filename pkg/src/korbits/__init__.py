"""K-orbits on flag varieties, closure orders and moment-map images."""
