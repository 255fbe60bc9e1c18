#!/usr/bin/env python
# encoding: utf-8

import glob
from setuptools import setup

scrpt = ["{}".format(i) for i in sorted(glob.glob("bin/kcut_*"))]

setup(
    name='kcut',
    version='0.4.0',
    description='enumeration of all minimum k-cuts in weighted graphs',
    author='kcut authors',
    license='BSD',
    platforms='any',
    packages=[
        'kcut',
        'kcut.tests',
    ],
    data_files=[('config', ['config/kcut.conf'])],
    scripts=scrpt,
    install_requires=[
        'numpy',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Natural Language :: English",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    )
