import os
import sys

# Add the src directory to the Python path so the launcher works from a checkout
project_root = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.join(project_root, "src")
if src_dir not in sys.path:
    sys.path.insert(0, src_dir)

from quasi_schur_app import main


if __name__ == "__main__":
    main()
