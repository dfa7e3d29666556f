"""CLI invocations shared by the CLI and acceptance tests."""
import subprocess
import sys

CASES = {
    "enddeg-Y2": ["enddeg", "Y", "--params", '{"l":2}'],
    "enddeg-Y3": ["enddeg", "Y", "--params", '{"l":3}'],
    "enddeg-chain_a-edge": ["enddeg", "chain_a", "--params", '{"k":4}', "--kind", "edge"],
    "enddeg-R2-edge": ["enddeg", "R2", "--kind", "edge"],
    "enddeg-chain_a-rel": ["enddeg", "chain_a", "--params", '{"k":4}', "--kind", "relative", "--budget", "5"],
    "enddeg-chain_b-rel": ["enddeg", "chain_b", "--params", '{"k":4}', "--kind", "relative", "--budget", "5"],
    "reduce-Kaleph": ["reduce", "Kkaleph", "--params", '{"k":4}', "--mode", "rayless", "--m", "4", "--budget", "10"],
    "reduce-double-ray": ["reduce", "double_ray", "--mode", "rayless", "--m", "2", "--budget", "50"],
    "reduce-chain_a": ["reduce", "chain_a", "--params", '{"k":4}', "--mode", "relative", "--k", "3"],
    "reduce-T3": ["reduce", "T", "--params", '{"k":3}', "--mode", "relative", "--k", "2", "--budget", "10"],
    "gridminor-grid": ["gridminor", "grid", "--k", "4", "--annulus", "3,12", "--m-min", "4"],
    "gridminor-Y2": ["gridminor", "Y", "--params", '{"l":2}', "--k", "5", "--annulus", "1,8", "--m-min", "4"],
    "pipeline-K12": ["reduce", "Kkaleph", "--params", '{"k":12}', "--mode", "pipeline", "--r", "4", "--m", "12"],
    "pipeline-Gp": ["reduce", "Gp", "--params", '{"k":4}', "--mode", "pipeline", "--r", "5", "--budget", "4"],
    "minimal-check": ["minimal", "check", "cycle", "--params", '{"n":6}', "--k", "2", "--mode", "edge-min-kconn"],
    "minimal-sweep": ["minimal", "sweep", "--n", "6", "--k", "3"],
    "thresholds": ["thresholds", "--k", "2"],
}


def run(args, cwd=None):
    proc = subprocess.run([sys.executable, "-m", "endgraphs", *args], capture_output=True, cwd=cwd)
    return proc.returncode, proc.stdout, proc.stderr
