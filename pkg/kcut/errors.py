# -*- coding: utf-8 -*-

"""
(c) 2026 kcut authors
All rights reserved.

This code is distributed under a 3-clause BSD license. Please see
LICENSE.txt for more information.

Created on 02 March 2026 09:40 CET (+0100)
"""


class KCutError(Exception):
    """Base class for every error raised by kcut"""


class GraphError(KCutError, ValueError):
    pass


class EdgeNotFound(KCutError, KeyError):
    pass


class NegativeWeight(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class WeightOverflow(GraphError):
    pass


class Disconnected(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class FullDeletion(GraphError):
    pass


class PartitionError(KCutError, ValueError):
    pass


class OverlappingParts(PartitionError):
    pass


class IncompleteCover(PartitionError):
    pass


class EmptyPart(PartitionError):
    pass


class InvalidBudget(KCutError, ValueError):
    pass


class RangeSpaceError(KCutError, ValueError):
    pass


class ConfigError(KCutError, ValueError):
    pass


class ParseError(KCutError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {}: {}".format(lineno, message)
        super(ParseError, self).__init__(message)
