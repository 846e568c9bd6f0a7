"""
hopfflow command line.

Usage:
    python -m hopfflow graphs enumerate --max-edges 2
    python -m hopfflow feynman series --model c3.json --order 2 --method both
    python -m hopfflow prim eval --in chart.json --args "4,3"
"""
from hopfflow.cli.app import main

if __name__ == "__main__":
    main()
