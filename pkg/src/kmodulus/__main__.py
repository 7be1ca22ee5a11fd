import sys

from kmodulus.cli import main

sys.exit(main())
