import sys

from clsfront.cli import main

sys.exit(main())
