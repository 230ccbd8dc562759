import json
import sys
from functools import wraps
from typing import Optional

import click

from .verification import SUITES, load_verification_settings, run_suites
from ..exceptions import InvariantViolation, MissingTubeTable, NotEuclidean, VerificationFailure
from ..pictures import MutatedPicture, NakayamaPicture, RegularPicture
from ..pictures.nakayamapicture import MAX_RANK
from ..quivercore.quiver import Quiver
from ..utils import ExactEncoder

EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE_ERROR = 2
EXIT_INVARIANT_VIOLATION = 3


def _exit_codes(command):
    """Map library exceptions onto the exit-code contract."""

    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except InvariantViolation as error:
            click.echo(f"Invariant violation: {error}", err=True)
            sys.exit(EXIT_INVARIANT_VIOLATION)
        except VerificationFailure as error:
            click.echo(f"Verification failed: {error}", err=True)
            sys.exit(EXIT_VERIFICATION_FAILURE)
        except (NotEuclidean, MissingTubeTable, ValueError) as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(EXIT_USAGE_ERROR)

    return wrapper


def _emit(picture, output_path, svg_path, overwrite, seed, display_progress):
    document = picture.run_picture(
        document_path=output_path,
        svg_path=svg_path,
        overwrite=overwrite,
        seed=seed,
        display_progress=display_progress,
    )
    if output_path is None:
        click.echo(document.to_json())
    if not document.verification["passed"]:
        raise VerificationFailure(json.dumps(document.verification["violations"], cls=ExactEncoder))


_output_options = [
    click.option(
        "--output-path", default=None, help="Write the picture document here instead of stdout.", type=click.Path()
    ),
    click.option(
        "--svg-path", default=None, help="Also draw the picture (circle or 2-sphere only).", type=click.Path()
    ),
    click.option("--overwrite", help="Overwrite existing output files.", is_flag=True),
    click.option("--seed", default=0, show_default=True, help="Seed selecting the stereographic pole.", type=int),
    click.option("--verbose", help="Print status messages.", is_flag=True),
    click.option("--display-progress", help="Show progress bars.", is_flag=True),
]


def output_options(command):
    for option in reversed(_output_options):
        command = option(command)
    return command


@click.group()
def wallchamber_cli():
    """Build and verify wall-and-chamber structures of Nakayama and Euclidean quiver algebras."""


@wallchamber_cli.command()
@click.argument("rank", type=click.IntRange(1, MAX_RANK))
@output_options
@_exit_codes
def nakayama(rank, output_path, svg_path, overwrite, seed, verbose, display_progress):
    """The semi-invariant picture of the self-injective Nakayama algebra of the given rank."""
    _emit(NakayamaPicture(rank=rank, verbose=verbose), output_path, svg_path, overwrite, seed, display_progress)


@wallchamber_cli.command()
@click.argument("quiver")
@click.option("--tube-table", default=None, help="Tube table for quivers not of type A~.", type=click.Path(exists=True))
@output_options
@_exit_codes
def regular(quiver, tube_table, output_path, svg_path, overwrite, seed, verbose, display_progress):
    """The regular semi-invariant picture of a Euclidean quiver given as 'n; i>j, ...'."""
    picture = RegularPicture(quiver=quiver, tube_table_file_path=tube_table, verbose=verbose)
    _emit(picture, output_path, svg_path, overwrite, seed, display_progress)


@wallchamber_cli.command()
@click.argument("quiver")
@click.argument("sequence", default="")
@click.option("--tube-table", default=None, help="Tube table for quivers not of type A~.", type=click.Path(exists=True))
@output_options
@_exit_codes
def mutate(quiver, sequence, tube_table, output_path, svg_path, overwrite, seed, verbose, display_progress):
    """Transport the regular picture of QUIVER along SEQUENCE (vertices separated by commas)."""
    if sequence.strip():
        picture = MutatedPicture(quiver=quiver, sequence=sequence, tube_table_file_path=tube_table, verbose=verbose)
    else:
        picture = RegularPicture(quiver=quiver, tube_table_file_path=tube_table, verbose=verbose)
    _emit(picture, output_path, svg_path, overwrite, seed, display_progress)


@wallchamber_cli.command()
@click.argument("quiver", required=False, default=None)
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITES), help="Suites to run (repeatable).")
@click.option("--rank", default=None, type=click.IntRange(1, MAX_RANK), help="Largest Nakayama rank for rank suites.")
@click.option("--tube-table", default=None, help="Tube table for quivers not of type A~.", type=click.Path(exists=True))
@click.option(
    "--settings", "settings_path", default=None, help="YAML/JSON verification settings.", type=click.Path(exists=True)
)
@click.option("--seed", default=None, type=int, help="Seed for all randomized sampling.")
@click.option("--display-progress", help="Show progress bars.", is_flag=True)
@_exit_codes
def verify(quiver: Optional[str], suites, rank, tube_table, settings_path, seed, display_progress):
    """Run verification suites and print the JSON report; exits 1 if any suite fails."""
    settings = load_verification_settings(settings_path, seed=seed, display_progress=display_progress or None)
    if quiver is None and rank is None:
        raise click.UsageError("Pass a QUIVER, a --rank, or both.")
    if not suites:
        suites = (["thmA", "stt"] if rank is not None else []) + (["thmB", "fan", "thmC"] if quiver is not None else [])
    report = run_suites(
        suites,
        quiver=Quiver.from_text(quiver) if quiver is not None else None,
        rank=rank,
        tube_table_file_path=tube_table,
        settings=settings,
    )
    click.echo(json.dumps(report.to_dict(), cls=ExactEncoder, indent=2, sort_keys=True))
    if not report["passed"]:
        sys.exit(EXIT_VERIFICATION_FAILURE)
