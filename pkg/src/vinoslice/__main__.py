"""
Permite ejecutar ``python -m vinoslice``.
"""

import sys

from .cli import main

sys.exit(main())
