#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'click',
    'matplotlib',
    'networkx',
    'numpy',
    'pandas',
    'sympy'
]

test_requirements = [
    # Use coverage to run coverage tests locally.
    'coverage'
]

setup(
    name='fpknot',
    version='0.2.0',
    description="Finitely presented group tools for the knot groups of "
                "Klein bottles and their branched double covers.",
    long_description=readme + '\n\n' + history,
    author="The fpknot developers",
    packages=find_packages(exclude=['tests', 'examples']),
    package_dir={'fpknot':
                 'fpknot'},
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'fpknot=fpknot.cli:main',
        ],
    },
    license="MIT license",
    zip_safe=False,
    keywords='fpknot group theory coset enumeration Todd-Coxeter '
             'Reidemeister-Schreier knot Klein bottle',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Visualization',
        'Topic :: Utilities'
    ],
    test_suite='tests',
    tests_require=test_requirements
)
