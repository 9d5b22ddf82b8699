"""Free-map hypermaps: terms, orbits, characteristics, criteria, rings and the Jordan check."""
