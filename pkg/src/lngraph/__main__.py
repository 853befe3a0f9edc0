import sys

from lngraph.cli import main

sys.exit(main())
