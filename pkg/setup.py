#!/usr/bin/python3
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from setuptools import setup, find_packages

setup(
    name = "ospf-mbt",
    version = "0.1",
    packages = find_packages(exclude=['tests']),
    python_requires='>=3.7',

    install_requires = [ 'networkx' ],
    extras_require = {
        'test' : [ 'hypothesis' ],
        'doc' : [ 'sphinx' ],
    },

    entry_points = {
        'console_scripts' : [ 'ospfmbt = ospfmbt.__main__:main' ],
    },

    description = "Model-based black-box testing of OSPF LSA flooding",
    license = "GPL v2 only",
)
