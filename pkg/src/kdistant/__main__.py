from kdistant.cli import main
import sys

sys.exit(main())
