"""
Usage:
    python main.py sweep cfgs/squeezing/cxi-0.1.yaml --threads 8 --plots
    python main.py validate cfgs/bandwidth/scenario-b.yaml
    python main.py single --eta 0.01 --nb 100 --cxi 0.03
"""
import sys

from qdoppler.sweep.cli import main

if __name__ == '__main__':
    sys.exit(main())
