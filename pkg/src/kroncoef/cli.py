"""Command-line interface: single queries, triple tables, verification sweeps,
and a quick self-test battery.

Exit codes: 0 success, 1 verification mismatch (or no closed form in closed
mode), 2 parse error, 3 size mismatch.  Machine-readable formats emit one JSON
object per line or CSV with the fixed column order lambda, mu, nu, gamma,
provenance.
"""

from __future__ import annotations

import csv
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import click

from . import lattice, schur_eval
from .characters import SizeMismatch, kron_oracle
from .closed_forms import (
    AUTO,
    METHODS,
    HypothesisNotMet,
    NoClosedFormApplicable,
    compute,
    kron_hook_tworow,
    kron_two_hooks,
    kron_two_tworow,
)
from .partitions import (
    NegativePart,
    Partition,
    enumerate_partitions,
    hook_parts,
    two_row_parts,
)

FAMILIES = ("two-row", "hook-hook", "hook-two-row", "all")


class PartitionParam(click.ParamType):
    """Comma-separated decreasing positive integers; "" is the empty partition."""

    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.from_text(value)
        except (ValueError, NegativePart) as exc:  # includes int() failures
            self.fail(f"bad partition {value!r}: {exc}", param, ctx)


PARTITION = PartitionParam()


def _result_record(lam, mu, nu, result, elapsed_ms):
    return {
        "lambda": list(lam.parts),
        "mu": list(mu.parts),
        "nu": list(nu.parts),
        "gamma": str(result.gamma),
        "provenance": result.provenance,
        "moves": list(result.moves),
        "elapsed_ms": elapsed_ms,
    }


def _csv_row(lam, mu, nu, gamma, provenance):
    buffer = io.StringIO()
    csv.writer(buffer).writerow([str(lam), str(mu), str(nu), str(gamma), provenance])
    return buffer.getvalue().rstrip("\r\n")


@click.group()
@click.version_option(package_name="kroncoef")
def main():
    """Exact Kronecker coefficients of the symmetric group: closed forms for
    two-row and hook shapes with an independent character-sum oracle."""


@main.command("compute")
@click.option("--lambda", "lam", type=PARTITION, required=True, help="First partition, e.g. 4,3,1.")
@click.option("--mu", type=PARTITION, required=True, help="Second partition.")
@click.option("--nu", type=PARTITION, required=True, help="Third partition.")
@click.option("--method", type=click.Choice(METHODS), default=AUTO, show_default=True)
@click.option("--format", "fmt", type=click.Choice(("plain", "json", "csv")), default="plain",
              show_default=True)
def cmd_compute(lam, mu, nu, method, fmt):
    """Compute a single Kronecker coefficient with provenance."""
    start = time.perf_counter()
    try:
        result = compute(lam, mu, nu, method)
    except SizeMismatch as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(3)
    except NoClosedFormApplicable as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if fmt == "json":
        click.echo(json.dumps(_result_record(lam, mu, nu, result, elapsed_ms)))
    elif fmt == "csv":
        click.echo("lambda,mu,nu,gamma,provenance")
        click.echo(_csv_row(lam, mu, nu, result.gamma, result.provenance))
    else:
        click.echo(f"gamma = {result.gamma}")
        click.echo(f"provenance = {result.provenance}")
        click.echo(f"moves = {' '.join(result.moves) if result.moves else '(none)'}")


def _family_pairs(shapes, family):
    """(mu, nu) pairs of a sweep family, in enumeration order.

    two-row means at most two parts (one-row shapes enter with second part 0);
    hooks are genuine hooks (m, 1^e) with m >= 2 and e >= 1.
    """
    two_rows = [p for p in shapes if two_row_parts(p) is not None]
    hooks = [p for p in shapes if hook_parts(p) is not None]
    if family == "two-row":
        return [(mu, nu) for mu in two_rows for nu in two_rows]
    if family == "hook-hook":
        return [(mu, nu) for mu in hooks for nu in hooks]
    if family == "hook-two-row":
        return [(mu, nu) for mu in hooks for nu in two_rows]
    return [(mu, nu) for mu in shapes for nu in shapes]


def _family_triples(n, family):
    """Triples of the sweep family for one n, in enumeration order."""
    shapes = list(enumerate_partitions(n))
    pairs = _family_pairs(shapes, family)
    for lam in shapes:
        for mu, nu in pairs:
            yield lam, mu, nu


def _closed_value(family, lam, mu, nu):
    """The family's closed form, with the dispatcher's oracle fallback when a
    hook hypothesis is unreachable."""
    try:
        if family == "two-row":
            return kron_two_tworow(lam, mu, nu)
        if family == "hook-hook":
            return kron_two_hooks(lam, mu, nu)
        if family == "hook-two-row":
            return kron_hook_tworow(lam, mu, nu)
        return compute(lam, mu, nu, AUTO).gamma
    except HypothesisNotMet:
        return kron_oracle(lam, mu, nu).gamma


@dataclass
class SweepReport:
    """Outcome of one family's closed-form-versus-oracle sweep."""

    n: int
    family: str
    triples_checked: int = 0
    mismatches: list = field(default_factory=list)
    elapsed_ms: int = 0
    max_gamma: int = 0

    def merge(self, other: "SweepReport") -> None:
        self.triples_checked += other.triples_checked
        self.mismatches.extend(other.mismatches)
        self.max_gamma = max(self.max_gamma, other.max_gamma)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "triples_checked": self.triples_checked,
            "mismatches": self.mismatches,
            "elapsed_ms": self.elapsed_ms,
            "max_gamma": self.max_gamma,
        }


def _sweep_chunk(family: str, n: int, lam_parts_list: list) -> SweepReport:
    """Verify all family triples whose lambda lies in the given chunk."""
    report = SweepReport(n=n, family=family)
    pairs = _family_pairs(list(enumerate_partitions(n)), family)
    for parts in lam_parts_list:
        lam = Partition(parts)
        for mu, nu in pairs:
            closed = _closed_value(family, lam, mu, nu)
            oracle = kron_oracle(lam, mu, nu).gamma
            report.triples_checked += 1
            report.max_gamma = max(report.max_gamma, closed)
            if closed != oracle:
                report.mismatches.append(
                    {"lambda": list(lam.parts), "mu": list(mu.parts), "nu": list(nu.parts),
                     "closed": closed, "oracle": oracle}
                )
    return report


def run_sweep(family: str, n_max: int, jobs: int = 1) -> SweepReport:
    """Closed-form-versus-oracle sweep over every n <= n_max of one family."""
    start = time.perf_counter()
    total = SweepReport(n=n_max, family=family)
    for n in range(1, n_max + 1):
        lam_parts = [p.parts for p in enumerate_partitions(n)]
        if jobs > 1 and len(lam_parts) > 1:
            chunks = [lam_parts[i::jobs] for i in range(jobs) if lam_parts[i::jobs]]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for report in pool.map(_sweep_chunk, [family] * len(chunks),
                                       [n] * len(chunks), chunks):
                    total.merge(report)
        else:
            total.merge(_sweep_chunk(family, n, lam_parts))
    total.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return total


@main.command("table")
@click.option("--n", type=int, required=True)
@click.option("--family", type=click.Choice(FAMILIES), default="all", show_default=True)
@click.option("--format", "fmt", type=click.Choice(("plain", "json", "csv")), default="plain",
              show_default=True)
def cmd_table(n, family, fmt):
    """Emit gamma for every triple of the family, one row per triple, in
    enumeration order."""
    if n < 1:
        click.echo("error: --n must be >= 1", err=True)
        sys.exit(2)
    writer = csv.writer(sys.stdout) if fmt == "csv" else None
    if writer:
        writer.writerow(["lambda", "mu", "nu", "gamma", "provenance"])
    for lam, mu, nu in _family_triples(n, family):
        result = compute(lam, mu, nu, AUTO)
        assert result.gamma >= 0
        if fmt == "json":
            click.echo(json.dumps(_result_record(lam, mu, nu, result, 0)))
        elif fmt == "csv":
            writer.writerow([str(lam), str(mu), str(nu), str(result.gamma), result.provenance])
        else:
            click.echo(f"{str(lam) or '-':>16}  {str(mu) or '-':>12}  {str(nu) or '-':>12}  "
                       f"{result.gamma:>4}  {result.provenance}")


@main.command("verify")
@click.option("--family", type=click.Choice(FAMILIES), default="all", show_default=True)
@click.option("--n-max", type=int, required=True)
@click.option("--jobs", type=int, default=1, show_default=True,
              help="Worker processes for the sweep (1 = in-process).")
@click.option("--format", "fmt", type=click.Choice(("plain", "json")), default="plain",
              show_default=True)
def cmd_verify(family, n_max, jobs, fmt):
    """Run the closed-form-versus-oracle sweep; nonzero exit on any mismatch."""
    if n_max < 1:
        click.echo("error: --n-max must be >= 1", err=True)
        sys.exit(2)
    families = [f for f in FAMILIES if f != "all"] if family == "all" else [family]
    failed = False
    for fam in families:
        report = run_sweep(fam, n_max, jobs)
        if fmt == "json":
            click.echo(json.dumps(report.to_json()))
        else:
            status = "ok" if not report.mismatches else "MISMATCH"
            click.echo(
                f"family={fam} n<={n_max} triples={report.triples_checked} "
                f"mismatches={len(report.mismatches)} max_gamma={report.max_gamma} "
                f"elapsed_ms={report.elapsed_ms} {status}"
            )
            for bad in report.mismatches:
                click.echo(f"  offending triple: {bad}")
        failed = failed or bool(report.mismatches)
    sys.exit(1 if failed else 0)


def _selftest_checks(seed):
    yield "rectangle count examples", (
        lattice.sigma_closed(9, 5, 4) == 9 and lattice.sigma_closed(9, 5, 8) == 19
    )
    yield "rectangle closed form vs brute force", all(
        lattice.sigma_closed(k, l, h) == lattice.sigma_bruteforce(k, l, h)
        for k in range(1, 9)
        for l in range(1, 9)
        for h in range(-2, k + l + 5)
    )
    yield "translated rectangle closed form vs brute force", all(
        lattice.gamma_region_closed(a, b, c, d, x, y)
        == lattice.gamma_region_bruteforce(a, b, c, d, x, y)
        for a in range(4) for b in range(4) for c in range(4) for d in range(4)
        for x in range(a + b + c + d + 5) for y in range(x + 1)
    )
    parity = all(
        kron_two_tworow(Partition((l, l)), Partition((l, l)), Partition((l, l)))
        == (1 if l % 2 == 0 else 0)
        for l in range(1, 9)
    )
    growth = all(
        kron_two_tworow(Partition((3 * l, l)), Partition((3 * l, l)), Partition((3 * l, l)))
        == (l + 2) // 2
        for l in range(1, 7)
    )
    yield "two-row coefficient families", parity and growth
    sweeps_ok = True
    for fam in ("two-row", "hook-hook", "hook-two-row"):
        sweeps_ok = sweeps_ok and not run_sweep(fam, 7).mismatches
    yield "closed forms vs oracle through n=7", sweeps_ok
    symmetric = True
    for n in range(1, 6):
        shapes = list(enumerate_partitions(n))
        for lam in shapes:
            for mu in shapes:
                for nu in shapes:
                    base = kron_oracle(lam, mu, nu).gamma
                    symmetric = symmetric and base == kron_oracle(mu, nu, lam).gamma
                    symmetric = symmetric and base == kron_oracle(lam, nu, mu).gamma
    yield "oracle symmetry through n=5", symmetric
    rng = random.Random(seed)
    comult = all(
        schur_eval.verify_comultiplication(
            lam,
            schur_eval.SignedAlphabet.positive(schur_eval.sample_fractions(rng, 3)),
            schur_eval.SignedAlphabet.positive(schur_eval.sample_fractions(rng, 3)),
        )
        for n in range(1, 5)
        for lam in enumerate_partitions(n)
    )
    yield "product-alphabet expansion through n=4", comult
    yield "difference-alphabet specializations through n=6", (
        schur_eval.verify_sergeev_specializations(6, seed=seed, points=2)
    )


@main.command("selftest")
@click.option("--seed", type=int, default=2718, show_default=True,
              help="Seed for the rational sample points.")
def cmd_selftest(seed):
    """Quick identity battery; one pass/fail line per check."""
    failed = False
    for name, ok in _selftest_checks(seed):
        click.echo(f"{'PASS' if ok else 'FAIL'}  {name}")
        failed = failed or not ok
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
