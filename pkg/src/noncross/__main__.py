import sys

from noncross.cli import main

sys.exit(main())
