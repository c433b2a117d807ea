"""Exact toolkit for Graham-Knuth-Patashnik recurrence triangles."""
