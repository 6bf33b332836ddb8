"""Hessian K3 surfaces of cubic surfaces and the moduli space of cubics."""
