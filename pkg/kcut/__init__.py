#!/usr/bin/env python
# encoding: utf-8

import os
import subprocess

__version__ = "0.4.0"


def _git_revision():
    """Short hash of HEAD when running from a checkout, else None"""
    checkout = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    git_dir = os.path.join(checkout, ".git")
    if not os.path.isdir(git_dir):
        return None
    try:
        result = subprocess.run(
            ["git", "--git-dir", git_dir, "rev-parse", "--short", "HEAD"],
            stdout=subprocess.PIPE,
            stderr=subprocess.DEVNULL,
            check=True,
        )
    except (OSError, subprocess.CalledProcessError):
        return None
    return result.stdout.decode("utf-8").strip() or None


_revision = _git_revision()
if _revision is not None:
    __version__ = "git {}".format(_revision)
