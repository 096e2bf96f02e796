"""Finite ring engine: hypercenters, semicommutativity classes and their neighbours."""

__version__ = "0.1.0"
