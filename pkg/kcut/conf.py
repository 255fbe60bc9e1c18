#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 03 March 2026 14:30 CET (+0100)
"""

import os
import sys
import configparser
import multiprocessing

from kcut.errors import ConfigError
from kcut.schedule import ScheduleConfig

SCHEDULE_KEYS = (
    "gamma",
    "c_z",
    "c_b",
    "base_k",
    "cap_const",
    "c_rep",
    "c_pack",
    "warm_start_rounds",
    "exhaustive_cutover",
)


def config_files(path=None):
    files = [
        os.path.join(sys.prefix, 'config/kcut.conf'),
        os.path.expanduser('~/.kcut.conf'),
    ]
    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError("config file {} does not exist".format(path))
        files.append(path)
    return files


def read_config(path=None):
    config = configparser.ConfigParser()
    # make case sensitive
    config.optionxform = str
    try:
        config.read(config_files(path))
    except configparser.Error as e:
        raise ConfigError(str(e))
    return config


def get_user_param(section, param, path=None):
    config = read_config(path)
    try:
        return config.get(section, param)
    except (configparser.NoSectionError, configparser.NoOptionError):
        return None


def get_schedule_config(path=None, **overrides):
    """ScheduleConfig from defaults, then config files, then overrides.

    Empty config values and None overrides leave the earlier value alone.
    """
    config = read_config(path)
    values = {}
    if config.has_section("schedule"):
        for key, value in config.items("schedule"):
            if key not in SCHEDULE_KEYS:
                raise ConfigError("unknown [schedule] key {!r}".format(key))
            if value.strip() == "":
                continue
            if key == "exhaustive_cutover":
                try:
                    values[key] = config.getboolean("schedule", key)
                except ValueError:
                    raise ConfigError("exhaustive_cutover must be a boolean, got {!r}".format(value))
            else:
                values[key] = value.strip()
    for key, value in overrides.items():
        if key not in SCHEDULE_KEYS:
            raise ConfigError("unknown schedule setting {!r}".format(key))
        if value is not None:
            values[key] = value
    return ScheduleConfig(**values)


def get_run_param(param, path=None, cast=int):
    value = get_user_param("run", param, path)
    if value is None or value.strip() == "":
        return None
    try:
        return cast(value)
    except ValueError:
        raise ConfigError("[run] {} has a bad value {!r}".format(param, value))


def apply_run_defaults(args):
    """Fill seed, cores and trees left unset on the command line from [run]"""
    path = getattr(args, "config", None)
    for param in ("seed", "cores", "trees"):
        if hasattr(args, param) and getattr(args, param) is None:
            setattr(args, param, get_run_param(param, path))
    if hasattr(args, "cores") and args.cores is None:
        args.cores = multiprocessing.cpu_count()
    return args
