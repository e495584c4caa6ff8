# qfsplit/main.py
import logging

import typer

from .config.settings import settings
from .commands.height import routes as height_routes
from .commands.delta1 import routes as delta1_routes
from .commands.witt import routes as witt_routes
from .commands.verify import routes as verify_routes
from .commands.enumerate import routes as enumerate_routes
from .commands.parse import routes as parse_routes

app = typer.Typer(
    name="qfsplit",
    help="Quasi-F-split heights of hypersurfaces via Fedder-type tests",
    no_args_is_help=True,
    add_completion=False,
)


def include_router(app: typer.Typer, router: typer.Typer):
    """Mount the commands of a router at the top level"""
    app.registered_commands.extend(router.registered_commands)


@app.callback()
def configure(
    log_level: str = typer.Option(settings.LOG_LEVEL, "--log-level", help="Logging level"),
):
    logging.basicConfig(level=log_level.upper(), format="%(levelname)s %(name)s: %(message)s")


# Include routers
include_router(app, parse_routes.router)
include_router(app, height_routes.router)
include_router(app, delta1_routes.router)
include_router(app, witt_routes.router)
include_router(app, verify_routes.router)
include_router(app, enumerate_routes.router)


def main():
    app()


if __name__ == "__main__":
    main()
