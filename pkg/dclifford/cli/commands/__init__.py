# Command functions, registered on the typer app by dclifford.cli.router.
