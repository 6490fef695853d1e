#!/usr/bin/env python3
"""
Ejecuta black, flake8 y mypy sobre arbolcausal.
Uso: python lint.py [--fix] [--skip-mypy]
"""

import argparse
import subprocess
import sys

SOURCES = ["arbolcausal", "tests", "usage", "benchmarks", "lint.py"]


def run_check(cmd, description):
    """Ejecuta una comprobación; True si termina sin errores."""
    print(f"\n[*] {description}...")
    result = subprocess.run(cmd, capture_output=True, text=True)
    if result.returncode == 0:
        print(f"[+] {description}: OK")
        return True
    print(f"[-] {description}: fallo")
    for stream in (result.stdout, result.stderr):
        if stream.strip():
            print(stream.rstrip())
    return False


def main():
    parser = argparse.ArgumentParser(description="Comprobaciones de estilo y tipos de arbolcausal")
    parser.add_argument("--fix", action="store_true", help="Reformatear con black en lugar de solo comprobar")
    parser.add_argument("--skip-mypy", action="store_true", help="Omitir la comprobación de tipos")
    args = parser.parse_args()

    black = ["black", *SOURCES] if args.fix else ["black", "--check", *SOURCES]
    checks = [
        (black, "black (reformateo)" if args.fix else "black"),
        (["flake8", "--max-line-length", "110", *SOURCES], "flake8"),
    ]
    if not args.skip_mypy:
        checks.append((["mypy", "arbolcausal"], "mypy"))

    ok = all([run_check(cmd, desc) for cmd, desc in checks])
    print("\nTodas las comprobaciones pasaron." if ok else "\nHay comprobaciones fallidas; pruebe con --fix.")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
