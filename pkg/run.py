"""
Quick start script for the Ratio-Set Workbench
Runs the small worked examples so a fresh checkout can be sanity-checked
"""

import sys
import subprocess
from pathlib import Path

DEMOS = {
    "1": ("Ratio set of a sumset", ["eval", "(A+A)/(A+A)", "--inline", "A={1,2,3}"]),
    "2": ("Theorem 1 tightness", ["verify", "thm1", "--inline", "A={1,2,3}"]),
    "3": ("Random Theorem 1 trials", ["verify", "thm1", "--random", "size=5,trials=20,seed=7"]),
    "4": ("Coprime pairs up to 50", ["verify", "coprime", "--n", "50"]),
    "5": ("Slope-cover figure", ["render", "slope-cover", "--inline", "A={1,2,3}", "--out", "out/slope_cover.svg"]),
}


def main():
    """Run one of the worked examples"""

    print("=" * 60)
    print("RATIO-SET WORKBENCH")
    print("=" * 60)
    print()

    if not (Path("config") / "workbench_config.yaml").exists():
        print("No config/workbench_config.yaml found; built-in defaults will be used")
        print()

    print("Run options:")
    for key, (title, _) in DEMOS.items():
        print(f"  {key}. {title}")
    print()

    choice = input(f"Select option (1-{len(DEMOS)}) [1]: ").strip() or "1"
    if choice not in DEMOS:
        print(f"Invalid option: {choice}")
        sys.exit(1)

    title, args = DEMOS[choice]
    cmd = [sys.executable, "src/main.py", *args]
    print(f"\n▶ {title}")
    print("Command:", " ".join(cmd))
    print()

    try:
        completed = subprocess.run(cmd)
    except KeyboardInterrupt:
        print("\n\nStopped by user")
        sys.exit(130)
    sys.exit(completed.returncode)


if __name__ == "__main__":
    main()
