"""Command-line interface: expression grammar, commands and the typer app."""
