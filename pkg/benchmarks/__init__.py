"""charclass benchmark suite."""
