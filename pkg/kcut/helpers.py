#!/usr/bin/env python
# encoding: utf-8

"""
helpers.py

Created on 02 March 2026 11:20 CET (+0100)
Copyright 2026 kcut authors. All rights reserved.
"""

import os
import argparse
from fractions import Fraction


class FullPaths(argparse.Action):
    """Expand user- and relative-paths"""
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, os.path.abspath(os.path.expanduser(values)))


class CreateDir(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        d = os.path.abspath(os.path.expanduser(values))
        if not os.path.isdir(d):
            os.makedirs(d)
        setattr(namespace, self.dest, d)


def is_dir(dirname):
    if not os.path.isdir(os.path.expanduser(dirname)):
        msg = "{0} is not a directory".format(dirname)
        raise argparse.ArgumentTypeError(msg)
    else:
        return dirname


def is_file(filename):
    if filename == "-":
        return filename
    if not os.path.isfile(os.path.expanduser(filename)):
        msg = "{0} is not a file".format(filename)
        raise argparse.ArgumentTypeError(msg)
    else:
        return filename


def fraction(value):
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        msg = "{0} is not a rational number".format(value)
        raise argparse.ArgumentTypeError(msg)


def fraction_list(value):
    return [fraction(item) for item in value.split(",") if item.strip()]


def positive_int(value):
    try:
        number = int(value)
    except ValueError:
        number = 0
    if number < 1:
        msg = "{0} is not a positive integer".format(value)
        raise argparse.ArgumentTypeError(msg)
    return number


def add_common_arguments(parser, seed=True, cores=False):
    """The flags every kcut script shares"""
    if seed:
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help="""The random seed (reproducible bit-for-bit given it)."""
        )
    if cores:
        parser.add_argument(
            "--cores",
            "--threads",
            dest="cores",
            type=positive_int,
            default=None,
            help="""The number of worker processes to use (default: [run] cores, else all)."""
        )
    parser.add_argument(
        "--config",
        type=is_file,
        action=FullPaths,
        default=None,
        help="""An optional kcut.conf overriding the installed one."""
    )
    parser.add_argument(
        "--json",
        action="store_true",
        default=False,
        help="""Write structured JSON to stdout instead of a table."""
    )
    parser.add_argument(
        "--verbosity",
        type=str,
        choices=["INFO", "WARN", "CRITICAL"],
        default="INFO",
        help="""The logging level to use."""
    )
    parser.add_argument(
        "--log-path",
        action=FullPaths,
        type=is_dir,
        default=None,
        help="""The path to a directory to hold logs."""
    )
    return parser
