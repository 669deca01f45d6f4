"""Cleanness of group rings O_p[G] over Q, Q(zeta_m) and Q(sqrt d)."""

__version__ = "0.1.0"
