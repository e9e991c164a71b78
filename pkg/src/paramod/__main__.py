import sys

from paramod.cli import main

sys.exit(main())
