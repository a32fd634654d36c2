"""Command-line runner for game evaluation and experiments.

Three subcommands: ``nim`` emits a nim-value table, ``cold`` emits the
cold positions, ``experiment`` runs one of the canned studies (max-nim
growth records, cold density at cube checkpoints, digit histograms).
Output is CSV or JSON carrying identical data; the algorithm choice
never changes the data rows, so outputs are comparable across solvers.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import analysis, games, solvers

__all__ = ["RunConfig", "cmd_nim", "cmd_cold", "cmd_experiment", "entrypoint"]

NIM_ALGOS = ("dp", "layered", "formula")
COLD_ALGOS = ("sieve", "dp", "dandc")
EXPERIMENTS = ("max-nim", "density", "digits")


@dataclass
class RunConfig:
    game: str
    limit: int
    algorithm: str | None = None
    experiment: str | None = None
    base: int = 5
    positions: int = 3
    fmt: str = "csv"
    out: str | None = None


class UsageError(Exception):
    pass


def _make_game(selector: str, limit: int) -> games.GameSpec:
    if limit < 1:
        raise UsageError("limit must be at least 1")
    if selector == "squares":
        return games.squares_game(limit)
    if selector == "moser":
        return games.moser_de_bruijn_game(limit)
    if selector.startswith("explicit:"):
        body = selector[len("explicit:") :]
        try:
            values = [int(tok) for tok in body.split(",") if tok.strip()]
        except ValueError:
            raise UsageError(f"bad explicit move list {body!r}") from None
        return games.explicit_game(values, limit)
    raise UsageError(
        f"unknown game {selector!r}; choose squares, moser, or explicit:<values>"
    )


def _nim_values(config: RunConfig, algo: str):
    game = _make_game(config.game, config.limit)
    if algo == "dp":
        return solvers.nim_dp(game).values
    if algo == "layered":
        return solvers.nim_layered(game).values
    if algo == "formula":
        if config.game != "moser":
            raise UsageError("algo formula applies only to the moser game")
        return [games.moser_nim_formula(p) for p in range(config.limit)]
    raise UsageError(f"unknown nim algorithm {algo!r}; choose one of {', '.join(NIM_ALGOS)}")


def _cold_indicator(config: RunConfig, algo: str):
    game = _make_game(config.game, config.limit)
    if algo == "sieve":
        return solvers.cold_sieve(game)
    if algo == "dp":
        return solvers.hotcold_dp(game).cold
    if algo == "dandc":
        return solvers.hotcold_dandc(game).cold
    raise UsageError(f"unknown cold algorithm {algo!r}; choose one of {', '.join(COLD_ALGOS)}")


def _fit_or_warn(rows):
    if len(rows) < 3:
        print(
            f"warning: only {len(rows)} data points, need 3 for a fit; emitting data without one",
            file=sys.stderr,
        )
        return None
    return analysis.siegel_fit(rows)


def _emit(config: RunConfig, command: str, algo: str | None, columns, rows, fit=None) -> int:
    if config.fmt == "json":
        payload = {
            "command": command,
            "game": config.game,
            "limit": config.limit,
            "algorithm": algo,
            "columns": list(columns),
            "rows": [list(r) for r in rows],
        }
        if config.experiment is not None:
            payload["experiment"] = config.experiment
            if config.experiment == "digits":
                payload["base"] = config.base
                payload["positions"] = config.positions
        if command == "experiment" and config.experiment in ("max-nim", "density"):
            payload["fit"] = None if fit is None else {
                "c": fit.coefficient,
                "e": fit.exponent,
                "points": fit.point_count,
            }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [",".join(columns)]
        lines.extend(",".join(str(v) for v in row) for row in rows)
        if fit is not None:
            lines.append(f"#fit,c={fit.coefficient!r},e={fit.exponent!r}")
        text = "\n".join(lines) + "\n"
    try:
        if config.out is None:
            sys.stdout.write(text)
        else:
            with open(config.out, "w") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {config.out!r}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_nim(config: RunConfig) -> int:
    """Emit the nim-value of every position below the limit."""
    algo = config.algorithm or "dp"
    try:
        values = _nim_values(config, algo)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = [(p, int(v)) for p, v in enumerate(values)]
    return _emit(config, "nim", algo, ("position", "nim_value"), rows)


def cmd_cold(config: RunConfig) -> int:
    """Emit the cold positions below the limit, ascending."""
    algo = config.algorithm or "sieve"
    try:
        cold = _cold_indicator(config, algo)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = [(int(p),) for p in cold.indices()]
    return _emit(config, "cold", algo, ("position",), rows)


def cmd_experiment(config: RunConfig) -> int:
    """Run one canned experiment and emit its data plus any monomial fit."""
    try:
        if config.experiment == "max-nim":
            algo = config.algorithm or "dp"
            table = solvers.NimTable(_nim_values(config, algo))
            rows = list(analysis.max_records(table).points)
            return _emit(config, "experiment", algo, ("n", "max_nim"), rows, _fit_or_warn(rows))
        if config.experiment == "density":
            algo = config.algorithm or "sieve"
            cold = _cold_indicator(config, algo)
            rows = analysis.density_samples(cold, config.limit)
            return _emit(config, "experiment", algo, ("n", "cold_count"), rows, _fit_or_warn(rows))
        if config.experiment == "digits":
            if config.base < 2:
                raise UsageError("base must be at least 2")
            if config.positions < 1:
                raise UsageError("need at least one digit position")
            algo = config.algorithm or "sieve"
            cold = _cold_indicator(config, algo)
            rows = []
            for pos in range(config.positions):
                hist = analysis.digit_histogram(cold, config.base, pos)
                rows.extend(
                    (hist.base, hist.position, d, int(c)) for d, c in enumerate(hist.counts)
                )
            return _emit(config, "experiment", algo, ("base", "position", "digit", "count"), rows)
        raise UsageError(
            f"unknown experiment {config.experiment!r}; choose one of {', '.join(EXPERIMENTS)}"
        )
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subgames",
        description="Evaluate subtraction games and run growth/density/digit experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, algos):
        sp.add_argument("--game", required=True,
                        help="squares, moser, or explicit:<comma-separated removals>")
        sp.add_argument("--limit", type=int, required=True,
                        help="exclusive upper bound on positions")
        sp.add_argument("--algo", default=None, choices=algos,
                        help=f"solver (default {algos[0]})")
        sp.add_argument("--format", default="csv", choices=("csv", "json"))
        sp.add_argument("--out", default=None, metavar="PATH",
                        help="write here instead of standard output")

    add_common(sub.add_parser("nim", help="nim-value table"), NIM_ALGOS)
    add_common(sub.add_parser("cold", help="cold positions"), COLD_ALGOS)
    exp = sub.add_parser("experiment", help="canned experiments")
    exp.add_argument("--experiment", required=True, choices=EXPERIMENTS)
    exp.add_argument("--base", type=int, default=5, help="digit experiment base")
    exp.add_argument("--positions", type=int, default=3,
                     help="number of low-order digit positions to tally")
    add_common(exp, NIM_ALGOS + COLD_ALGOS)

    return parser


def entrypoint(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        game=args.game,
        limit=args.limit,
        algorithm=args.algo,
        experiment=getattr(args, "experiment", None),
        base=getattr(args, "base", 5),
        positions=getattr(args, "positions", 3),
        fmt=args.format,
        out=args.out,
    )
    handler = {"nim": cmd_nim, "cold": cmd_cold, "experiment": cmd_experiment}[args.command]
    return handler(config)


if __name__ == "__main__":
    sys.exit(entrypoint())
