#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# ospf-mbt documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))
sys.path.insert(0, os.path.abspath('.'))

def run_apidoc(_):
    try:
        from sphinx.ext.apidoc import main
    except ImportError as e:
        from sphinx.apidoc import main
    import gen_command_docs
    cur_dir = os.path.abspath(os.path.dirname(__file__))

    out_dir = os.path.join(cur_dir, "ospfmbt")
    mod_dir = os.path.join(cur_dir, "..", "ospfmbt")
    argv = [ '-M', '-e', '-H', 'ospf-mbt API Reference', '-f',
            '-o', out_dir, mod_dir , f'*ospfmbt/commands/[a-z]*' ]
    main(argv)

    # We want to document the commands as part of the command reference
    # not the API documentation.
    f = open(f"{cur_dir}/ospfmbt/ospfmbt.commands.rst")
    lines = f.readlines()
    f.close()
    f = open(f"{cur_dir}/ospfmbt/ospfmbt.commands.rst", "w")
    printit = True
    for line in lines:
        if 'Submodules' in line:
            printit = False
        elif 'Module contents' in line:
            printit = True

        if printit:
            print(line, file=f, end='')
    f.close()

    print("*** Generating doc templates")

    gen_command_docs.gen_command_docs(cur_dir)

def setup(app):
    app.connect('builder-inited', run_apidoc)

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.coverage',
              'sphinx.ext.viewcode',
              'sphinx.ext.napoleon']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'ospf-mbt'
version = '0.1'
release = '0.1'
language = None
exclude_patterns = ['build']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Model-based testing of OSPF flooding',
    'logo_name': True,
    'logo_text_align': 'center',
}
htmlhelp_basename = 'ospf-mbtdoc'

man_pages = [
    ('ospf-mbt', 'ospfmbt', 'ospf-mbt Documentation', [], 1),
]
