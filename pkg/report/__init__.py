"""Command surface: run configuration, dispatch and report writers."""
