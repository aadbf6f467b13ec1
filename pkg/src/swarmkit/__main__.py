import sys

from swarmkit.cli.main import main

sys.exit(main())
