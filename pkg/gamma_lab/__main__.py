import sys

from gamma_lab.main import main

sys.exit(main())
