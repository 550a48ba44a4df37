"""Scripts d'automatisation de pellab."""
