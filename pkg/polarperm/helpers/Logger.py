import sys
import warnings
from datetime import datetime
from enum import IntEnum

import click

datetime_string_format = '%Y-%m-%d %H:%M:%S.%f'


class LogLevel(IntEnum):
    """The LogLevel class is an Enum to define available and set current logging levels."""
    TRACE = 6
    DEBUG = 5
    INFO = 4
    WARN = 3
    ERROR = 2
    FATAL = 1
    SILENT = 0


class Logger:
    """
    A class to manage and write log messages. Everything goes to stderr so that stdout only ever carries
    results.
    """

    def __init__(self, log_level=LogLevel.INFO, name='DefaultLogger', filter_deprecated=True):
        """
        Logger constructor.

        :param log_level: The desired level of logging output. OPTIONAL. Defaults to LogLevel.INFO. Level names
                          are accepted in any case; an unknown name means INFO.
        :param name: The identifier for this Logger. OPTIONAL. Defaults to 'DefaultLogger'
        """
        if log_level is None:
            self.level = LogLevel.INFO
        elif isinstance(log_level, str):
            try:
                self.level = LogLevel[log_level.upper()]
            except KeyError:
                self.level = LogLevel.INFO
        else:
            self.level = LogLevel(log_level)
        self.name = name
        self.__trace_cache = {datetime.now().strftime(datetime_string_format): "Cache initialized"}
        if filter_deprecated:
            warnings.filterwarnings("ignore", category=DeprecationWarning)

    def __echo(self, line, **style):
        click.echo(click.style(line, **style), err=True)

    def __stamp(self):
        return datetime.now().strftime(datetime_string_format)

    def trace(self, message, cache=None):
        if self.level >= LogLevel.TRACE:
            timestamp = self.__stamp()
            if cache is not None:
                self.__trace_cache[timestamp] = message + ": " + cache
            self.__echo(timestamp + ' [TRACE] ' + self.name + ' ' + message, fg='white', dim=True)

    def debug(self, title, content=''):
        if self.level >= LogLevel.DEBUG:
            self.__echo(self.__stamp() + ' [DEBUG] ' + self.name + ' ' + title.rjust(25) + ':  ' + content,
                        fg='white', bg='blue')

    def info(self, message):
        if self.level >= LogLevel.INFO:
            self.__echo(self.__stamp() + ' [INFO] ' + self.name + ' ' + message, fg='green')

    def warn(self, message):
        if self.level >= LogLevel.WARN:
            self.__echo(self.__stamp() + ' [WARN] ' + self.name + ' ' + message, fg='yellow')

    def error(self, message):
        if self.level >= LogLevel.ERROR:
            self.__echo(self.__stamp() + ' [ERROR] ' + self.name + ' ' + message, fg='red')

    def fatal(self, message, exit_code=1):
        if self.level >= LogLevel.FATAL:
            self.__echo(self.__stamp() + ' [FATAL] ' + self.name + ' ' + message,
                        fg='bright_white', bg='red', bold=True)
        self.trace_dump()
        sys.exit(exit_code)

    def trace_dump(self):
        if self.level >= LogLevel.TRACE:
            for key, value in self.__trace_cache.items():
                self.__echo(key + ' [TRACE-DUMP] ' + self.name + ' ' + value, fg='white', dim=True)
            self.__trace_cache = {}
        else:
            self.debug('trace_dump', 'log level below TRACE, skipping dump')

    def get_trace_cache(self):
        return dict(self.__trace_cache)
