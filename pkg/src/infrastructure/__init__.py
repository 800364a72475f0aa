"""Infrastructure layer - configuration, report rendering and job runners."""
