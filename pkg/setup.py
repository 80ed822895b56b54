#!/usr/bin/env python

from setuptools import setup

setup(name='nggroups',
      version='0.1.dev0',
      description='Groups of non-bijective transformations of finite sets',
      packages=['nggroups',
                'nggroups.enumeration',
                'nggroups.enumeration.tests',
                'nggroups.fieldgen',
                'nggroups.fieldgen.tests',
                'nggroups.group',
                'nggroups.group.tests',
                'nggroups.quotient',
                'nggroups.quotient.tests',
                'nggroups.regularity',
                'nggroups.regularity.tests',
                'nggroups.transformation',
                'nggroups.transformation.tests',
                'nggroups.tests',
                'nggroups.utils',
                'nggroups.utils.tests'],
      package_data={'nggroups.utils.tests': ['data/*.conf', 'data/*.txt']},
      provides=['nggroups'],
      install_requires=['numpy', 'scipy', 'astropy', 'sympy'],
      entry_points={'console_scripts': ['nggroups = nggroups.cli:main']},
      keywords=['Scientific/Engineering'],
     )
