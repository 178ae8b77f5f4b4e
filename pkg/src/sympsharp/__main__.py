import sys

from sympsharp.cli import main

sys.exit(main())
