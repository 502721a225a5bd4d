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
Flows, Hamiltonians and Poisson operators of the extended q-deformed KdV
hierarchy, and its relation to the Principal, fractional Volterra and
Volterra hierarchies.
"""

from ._constants import *
from ._principal import *
from ._poisson import *
from ._flows import *
from ._hamiltonians import *
from ._volterra import *
from ._combinatorics import *
from ._dispatch import *
