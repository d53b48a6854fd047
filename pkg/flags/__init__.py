"""Flag algebra over the types 0, 1, E and sigma with exact rational coefficients."""
