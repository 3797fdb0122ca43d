import sys

from dqeig.main import main

sys.exit(main())
