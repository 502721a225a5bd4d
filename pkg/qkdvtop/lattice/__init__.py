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
Pseudo-difference operators in the shift ``Lambda = exp(eps dx)``.
"""

from ._lattice import *
from ._operator import *
from ._lax import *
