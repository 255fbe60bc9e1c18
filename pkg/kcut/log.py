#!/usr/bin/env python
# encoding: utf-8
"""
File: log.py

Created on 02 March 2026 11:05 CET (+0100)
Copyright (c) 2026 kcut authors. All rights reserved.

Description: logger setup shared by the bin/ scripts.

"""

import os
import sys
import logging

from kcut import __version__

LEVELS = {
    "INFO": logging.INFO,
    "WARN": logging.WARN,
    "CRITICAL": logging.CRITICAL,
}


def setup_logging(args, name=None, stream=None):
    if name is None:
        import __main__ as main
        name = os.path.basename(os.path.splitext(getattr(main, "__file__", "kcut"))[0])
    if stream is None:
        stream = sys.stderr if getattr(args, "json", False) else sys.stdout
    log = logging.getLogger(name)
    # scripts may be run repeatedly in one interpreter (tests)
    for handler in list(log.handlers):
        log.removeHandler(handler)
        handler.close()
    log.propagate = False
    console = logging.StreamHandler(stream)
    log_path = getattr(args, "log_path", None)
    if log_path is not None:
        logfile = logging.FileHandler(os.path.join(log_path, "{}.log".format(name)))
    else:
        logfile = logging.FileHandler("{}.log".format(name))
    level = LEVELS[getattr(args, "verbosity", "INFO")]
    log.setLevel(level)
    console.setLevel(level)
    logfile.setLevel(level)
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    console.setFormatter(formatter)
    logfile.setFormatter(formatter)
    log.addHandler(console)
    log.addHandler(logfile)
    text = " Starting {} ".format(name)
    log.info(text.center(65, "="))
    log.info("Version: {}".format(__version__))
    for arg, value in sorted(vars(args).items()):
        log.info("Argument --{}: {}".format(arg.replace("_", "-"), value))
    return log, name


def end_logging(log, name):
    text = " Completed {} ".format(name)
    log.info(text.center(65, "="))
    for handler in list(log.handlers):
        handler.flush()
