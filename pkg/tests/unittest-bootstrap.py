# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import sys
import os
import unittest

sys.path.insert(0, os.path.abspath("build/lib"))

pattern = sys.argv[1] if len(sys.argv) > 1 else 'test_*.py'

test_loader = unittest.TestLoader()
test_suite = test_loader.discover('tests', pattern=pattern,
                                  top_level_dir='.')
ret = unittest.TextTestRunner(verbosity=1).run(test_suite)
if not ret.wasSuccessful():
    sys.exit(1)

sys.exit(0)
