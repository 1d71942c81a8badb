"""Exact H-factor search and H_n-factor theorem verification."""
