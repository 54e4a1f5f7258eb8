import sys

from newton_centers.cli.main import main

sys.exit(main())
