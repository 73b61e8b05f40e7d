"""Benchmark harness CLI for charclass."""

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

console = Console()

RESULTS_DIR = Path(__file__).parent / "results"


def print_instructions() -> None:
    console.print("\n[bold cyan]charclass Benchmark Harness[/bold cyan]\n")

    console.print("[yellow]Available benchmarks:[/yellow]")
    console.print("  • f2_kernel_bench  - rank and kernel of packed F2 matrices")
    console.print("  • basis_bench      - degreewise bases, quotient normal forms, Gysin exactness\n")

    console.print("[yellow]Usage:[/yellow]")
    console.print("  pytest benchmarks/f2_kernel_bench.py benchmarks/basis_bench.py --benchmark-only")
    console.print("  pytest benchmarks/basis_bench.py --benchmark-only --benchmark-json=results.json\n")

    console.print("[yellow]View results:[/yellow]")
    console.print("  python -m benchmarks --results\n")


def load_benchmark_results() -> dict[str, Any]:
    """Load the summaries written by the benchmark runs."""
    results: dict[str, Any] = {}
    if not RESULTS_DIR.exists():
        return results

    for result_file in sorted(RESULTS_DIR.glob("*.json")):
        try:
            results[result_file.stem] = json.loads(result_file.read_text())
        except (OSError, json.JSONDecodeError) as e:
            console.print(f"[red]Error loading {result_file}: {e}[/red]")

    return results


def display_results(results: dict[str, Any]) -> None:
    if not results:
        console.print("[yellow]No benchmark results found.[/yellow]")
        console.print("Run benchmarks with: pytest benchmarks/*_bench.py --benchmark-only")
        return

    table = Table(title="Benchmark Results", show_header=True)
    table.add_column("Benchmark", style="cyan")
    table.add_column("Status", style="green")
    table.add_column("Mean (s)", style="yellow")
    table.add_column("Details", style="white")

    for name, data in results.items():
        status = "✓" if data.get("success", False) else "✗"
        mean = data.get("benchmark_stats", {}).get("mean", 0.0)
        table.add_row(name, status, f"{mean:.4f}", data.get("summary", "No details available"))

    console.print(table)


def main() -> int:
    parser = argparse.ArgumentParser(description="charclass Benchmark Harness")
    parser.add_argument("--dry-run", action="store_true", help="Show benchmark instructions without running")
    parser.add_argument("--results", action="store_true", help="Display benchmark results")
    args = parser.parse_args()

    if args.results:
        display_results(load_benchmark_results())
        return 0

    print_instructions()
    return 0


if __name__ == "__main__":
    sys.exit(main())
