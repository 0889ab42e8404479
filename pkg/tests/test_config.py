# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

import unittest

from ospfmbt.config import RunConfig, NAIVE, PREFIX
from ospfmbt.exceptions import ConfigError

class TestRunConfig(unittest.TestCase):
    def test_defaults_are_valid(self):
        config = RunConfig()
        self.assertIs(config.validate(), config)
        self.assertEqual(config.topology, "five")
        self.assertEqual(config.normalization, "top")

    def test_out_of_range(self):
        bad = [dict(depth=0), dict(max_paths=0), dict(prefixes=0),
               dict(per_prefix=0), dict(budget=0), dict(prefix_len=-1),
               dict(stability_timeout=0.0), dict(mode="breadth"),
               dict(normalization="middle"), dict(symbolic=(0, 1)),
               dict(seeds=["bogus:1"]), dict(seeds=["spoofed-empty:x"])]
        for values in bad:
            with self.assertRaises(ConfigError, msg=str(values)):
                RunConfig(**values).validate()

    def test_symbolic_needs_no_seeds(self):
        with self.assertRaises(ConfigError):
            RunConfig(symbolic=(2, 1), seeds=["maxseq-remnant:1"]).validate()
        with self.assertRaises(ConfigError):
            RunConfig(symbolic=(2, 1), mode=PREFIX).validate()
        RunConfig(symbolic=(2, 1), mode=NAIVE).validate()

    def test_dict(self):
        config = RunConfig(topology="line2", symbolic=None, depth=2,
                           seeds=["maxseq-remnant:1"], budget=10)
        data = config.to_dict()
        self.assertEqual(data['seeds'], ["maxseq-remnant:1"])
        self.assertEqual(RunConfig.from_dict(data), config)

        data = RunConfig(symbolic=(2, 1)).to_dict()
        self.assertEqual(data['symbolic'], [2, 1])
        self.assertEqual(RunConfig.from_dict(data).symbolic, (2, 1))

    def test_unknown_setting(self):
        with self.assertRaises(ConfigError) as cm:
            RunConfig.from_dict({"depht": 2})
        self.assertEqual(cm.exception.name, "depht")

    def test_hash(self):
        a = RunConfig(topology="line2")
        self.assertEqual(a.config_hash(), RunConfig(topology="line2")
                         .config_hash())
        self.assertEqual(len(a.config_hash()), 64)
        self.assertNotEqual(a.config_hash(),
                            RunConfig(topology="line2", depth=2)
                            .config_hash())
