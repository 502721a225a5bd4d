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
Command line interface, run configuration, genus cache and verification
suites.
"""

from ._runconfig import *
from ._cache import *
from ._serialize import *
from ._suites import *
from ._main import *
