import argparse
import importlib
import logging
import os
import sys
import traceback

from errors.error_logger import error_send, setup_logging
from errors.exceptions import FramesError, UsageError
from frames.exactfield import make_context
from frames.strata import FrameSpaceParams
from utilities.settings import ROOT, load_settings

logger = logging.getLogger(__name__)

COMMANDS_DIR = ROOT / "commands"


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class App:
    def __init__(self, settings):
        self.settings = settings
        self.commands = {}
        self._contexts = {}
        self.parser = ArgumentParser(
            prog="orthoframes",
            description="Strata, components and smooth points of the variety of orthogonal frames.",
        )
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND")

    def add_command(self, command):
        parser = self.subparsers.add_parser(command.name, help=command.description, description=command.description)
        command.add_arguments(parser)
        self.commands[command.name] = command

    # shared flags

    def add_params_arguments(self, parser):
        parser.add_argument("--d", type=int, required=True, help="dimension of the quadratic space")
        parser.add_argument("--n", type=int, required=True, help="number of frame vectors")

    def add_format_argument(self, parser, choices=("text", "json")):
        default = self.settings.format if self.settings.format in choices else choices[0]
        parser.add_argument("--format", choices=choices, default=default)

    def add_field_arguments(self, parser):
        parser.add_argument("--seed", type=int, default=self.settings.seed)
        parser.add_argument("--prime", type=int, default=self.settings.prime)
        parser.add_argument("--trials", type=int, default=self.settings.trials)

    def params(self, args):
        return FrameSpaceParams(args.d, args.n)

    def context(self, prime):
        if prime not in self._contexts:
            self._contexts[prime] = make_context(prime)
        return self._contexts[prime]

    def load_commands(self, selected_commands=None):
        """Import every module in commands/ (or just the selected ones) and call its setup(app)."""
        names = selected_commands or sorted(
            file[:-3] for file in os.listdir(COMMANDS_DIR)
            if file.endswith(".py") and not file.startswith("_")
        )
        for name in names:
            try:
                module = importlib.import_module(f"commands.{name}")
                module.setup(self)
                logger.debug(f"loaded command module {name}")
            except Exception:
                logger.error(f"Error loading command module {name}:\n{traceback.format_exc()}")
                raise


def run(argv=None, stdout=None, stderr=None):
    """Parse argv, run one command and return its exit code."""
    try:
        settings = load_settings()
    except FramesError as e:
        return error_send(e, stream=stderr)
    setup_logging(settings.error_log, settings.log_level)

    app = App(settings)
    app.load_commands()
    try:
        args = app.parser.parse_args(argv)
        if args.command is None:
            raise UsageError("no command given; see --help")
        command = app.commands[args.command]
        return command.run(args, stdout=stdout)
    except SystemExit as e:
        # --help
        return e.code or 0
    except Exception as e:
        return error_send(e, stream=stderr)


if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        sys.exit(130)
