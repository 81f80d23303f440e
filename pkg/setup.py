import sys

from setuptools import find_packages, setup

# Check if current python installation is >= 3.8
if sys.version_info < (3, 8, 0):
  raise Exception("ICPi requires python 3.8 or later")

with open("README.md", encoding='utf-8') as f:
    long_description = f.read()

with open('requirements.txt') as f:
    requirements = f.readlines()

setup(
    name="icpi-pkg",
    version="0.1.0",
    author="ICPi developers",
    description="Pi-property and IC-Pi-property engine for finite permutation groups, "
                "with a theorem verification harness",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
    ],
    keywords='finite groups permutation groups subgroup embedding chief factors hypercenter',
    python_requires='>=3.8,<3.10',
    packages=find_packages(exclude=['docs', 'tests']),
    install_requires=requirements,
    entry_points={
        'console_scripts': ['icpi=ICPi.cli:main'],
    },
)
