import sys

from realforms.cli import main


sys.exit(main())
