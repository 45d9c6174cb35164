import sys

from pbci.cli import main

sys.exit(main())
