#!/usr/bin/env python

#
# This file is part of the `qkdvtop` Python module
#
# Copyright 2024
# qkdvtop developers
#
# Distributed under the GPLv3 license
# See the file `LICENSE` or read a copy at
# https://www.gnu.org/licenses/gpl-3.0.txt
#

"""
Entry point for ``python -m qkdvtop``.
"""

import sys

from qkdvtop.cli import main

if __name__ == '__main__':

    sys.exit(main())
