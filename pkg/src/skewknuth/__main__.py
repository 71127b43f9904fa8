import sys

from skewknuth.cli import main

sys.exit(main())
