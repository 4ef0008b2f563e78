import unittest

import pytest

from polarperm.helpers import Logger, LogLevel


def msg_output(logger, exit_code=1):
    logger.trace('LogLevel: ' + logger.level.name)
    logger.debug('LogLevel', logger.level.name)
    logger.info('LogLevel: ' + logger.level.name)
    logger.warn('LogLevel: ' + logger.level.name)
    logger.error('LogLevel: ' + logger.level.name)
    logger.fatal('LogLevel: ' + logger.level.name, exit_code)


class LoggerTestCase(unittest.TestCase):

    def test_logger_unknown_level_name(self):
        logger = Logger('deug')
        self.assertEqual(logger.level, LogLevel.INFO)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_level_name_any_case(self):
        self.assertEqual(Logger('trace').level, LogLevel.TRACE)
        self.assertEqual(Logger('Silent').level, LogLevel.SILENT)
        self.assertEqual(Logger(None).level, LogLevel.INFO)

    def test_logger_trace(self):
        logger = Logger(LogLevel.TRACE)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_debug(self):
        logger = Logger(LogLevel.DEBUG)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_info(self):
        logger = Logger(LogLevel.INFO)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_warn(self):
        logger = Logger(LogLevel.WARN)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_error(self):
        logger = Logger(LogLevel.ERROR)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_logger_fatal_exit_code(self):
        logger = Logger(LogLevel.FATAL)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger, 2)
        self.assertEqual(cm.exception.code, 2)

    def test_logger_silent(self):
        logger = Logger(LogLevel.SILENT)
        with self.assertRaises(SystemExit) as cm:
            msg_output(logger)
        self.assertEqual(cm.exception.code, 1)

    def test_trace_cache(self):
        logger = Logger(LogLevel.TRACE, 'cache')
        logger.trace('Parsed document', '{"n": 1}')
        self.assertIn('Parsed document: {"n": 1}', logger.get_trace_cache().values())
        logger.trace_dump()
        self.assertEqual(logger.get_trace_cache(), {})


def test_messages_go_to_stderr(capsys):
    logger = Logger(LogLevel.INFO, 'stream')
    logger.info('hello')
    logger.debug('hidden', 'below INFO')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert '[INFO] stream hello' in captured.err
    assert 'hidden' not in captured.err


def test_silent_writes_nothing(capsys):
    logger = Logger(LogLevel.SILENT)
    with pytest.raises(SystemExit):
        msg_output(logger)
    captured = capsys.readouterr()
    assert captured.out == '' and captured.err == ''
