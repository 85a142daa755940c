"""Cluster categories of hereditary algebras and their combinatorial shadows."""
