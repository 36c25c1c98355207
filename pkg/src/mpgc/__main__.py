import sys

from mpgc.cli import main

sys.exit(main())
