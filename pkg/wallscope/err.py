# -*- coding: utf-8 -*-
#
# Copyright (c) 2026, wallscope developers
# All rights reserved.
#
# Licensed under the BSD 3-Clause License:
# http://opensource.org/licenses/BSD-3-Clause
#


class WallscopeError(Exception):
    pass


class DomainError(WallscopeError):
    '''
    Raise error for an input that violates an operation's precondition.
    '''
    pass


class UnsupportedRegimeError(DomainError):
    '''
    Raise error for an input that is well formed but outside the regime the
    enumeration is implemented for (for example, a class of rank other than
    one).
    '''
    pass


class DataError(WallscopeError):
    '''
    Raise error when a shipped data file is missing or malformed.
    '''
    def __init__(self, message, data_name=None):
        if data_name is not None:
            message = 'In data file "{0}":\n  {1}'.format(data_name, message)
        super().__init__(message)


class CharacterParseError(WallscopeError):
    '''
    Raise error related to a particular token of a character or rational
    literal.
    '''
    def __init__(self, message, token=None, literal=None):
        self.token = token
        if token is not None and literal is not None and literal != token:
            message = 'In "{0}", token "{1}":\n  {2}'.format(literal, token, message)
        elif token is not None:
            message = 'In "{0}":\n  {1}'.format(token, message)
        super().__init__(message)
