import sys

from treelike.cli import main

sys.exit(main())
