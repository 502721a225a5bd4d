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
Loop equations of the one-dimensional Frobenius manifold with potential
``v^4 / 12`` and of the fractional Volterra hierarchy, solved genus by
genus for the free energies.
"""

from ._ring import *
from ._models import *
from ._solver import *
from ._identities import *
