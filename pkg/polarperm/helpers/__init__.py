from .Logger import Logger, LogLevel
from .MatrixDocument import MatrixDocument, parse_document
