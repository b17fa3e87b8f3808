import sys

from plumblink.cli import main

sys.exit(main())
