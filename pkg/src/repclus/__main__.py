import sys

from repclus.cli import main

sys.exit(main())
