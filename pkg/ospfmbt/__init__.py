# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
ospfmbt generates tests for OSPF's flooding procedure from an executable
model, runs them against an implementation and reports where the two
disagree.
"""

__version__ = "0.1"
