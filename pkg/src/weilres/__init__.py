"""Decomposing Weil restrictions of abelian varieties over finite fields, with exact arithmetic."""
