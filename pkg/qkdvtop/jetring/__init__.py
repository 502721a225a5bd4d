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
Exact differential polynomial algebra in the jets of one scalar field.
"""

from ._monomial import *
from ._diffpoly import *
from ._diffop import *
from ._calculus import *
from ._coords import *
from ._numeric import *
from ._text import *
