"""Run every registered check and print a summary table.

    python3 scripts/run_checks.py [--max-n N] [--json]
"""

import argparse
import json
import sys

from graphthrottle.verify import verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, help="upper order for catalog scopes")
    parser.add_argument("--json", action="store_true", help="one JSON object per check")
    args = parser.parse_args()

    results = verify_all(args.max_n)
    for r in results:
        if args.json:
            print(json.dumps(r.to_json()))
        else:
            status = "pass" if r.passed else f"FAIL {r.counterexample}"
            print(f"{r.id:<26} {r.scope:<18} {r.elapsed_ms:>7} ms  {status}")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
