import json
from dataclasses import dataclass

from ..errors import DocumentError, DomainError
from ..matrices import CubeMatrix, SquareMatrix
from ..rings import RING_KINDS, ring_for
from ..rings.MultiPoly import VARIABLE_PATTERN

KINDS = ('matrix', 'cube')
REQUIRED_FIELDS = ('kind', 'ring', 'n', 'entries')
OPTIONAL_FIELDS = ('distinct',)


def _reject_duplicate_keys(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise DocumentError("Duplicate field '%s'" % key)
        seen[key] = value
    return seen


@dataclass(frozen=True)
class MatrixDocument:
    """
    A matrix or cube read from JSON-shaped text. ``entries`` holds canonical scalar literals: bare integers,
    'p/q' strings, variable names (symbolic ring) or 2x2 arrays of those (matrix2 ring).
    """
    kind: str
    ring: str
    n: int
    entries: tuple
    distinct: bool = False

    @classmethod
    def parse(cls, text):
        """
        Parse and validate a document strictly: unknown or duplicate fields, wrong shapes and scalars that do
        not belong to the declared ring are all DocumentErrors.

        :param text: UTF-8 bytes or str.
        :return: A validated MatrixDocument.
        """
        if isinstance(text, bytes):
            try:
                text = text.decode('utf-8')
            except UnicodeDecodeError as e:
                raise DocumentError('Document is not valid UTF-8: %s' % e.reason, column=e.start + 1)
        try:
            raw = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
        except json.JSONDecodeError as e:
            raise DocumentError('Malformed document: %s' % e.msg, line=e.lineno, column=e.colno)
        except RecursionError:
            raise DocumentError('Document nests too deeply')
        if not isinstance(raw, dict):
            raise DocumentError('A document must be a JSON object', where='$')

        unknown = sorted(set(raw) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS))
        if unknown:
            raise DocumentError('Unknown field(s): %s' % ', '.join(unknown), where='$')
        missing = [name for name in REQUIRED_FIELDS if name not in raw]
        if missing:
            raise DocumentError('Missing field(s): %s' % ', '.join(missing), where='$')

        kind, ring_kind, n = raw['kind'], raw['ring'], raw['n']
        if kind not in KINDS:
            raise DocumentError("'kind' must be one of %s, got %r" % (', '.join(KINDS), kind), where='$.kind')
        if ring_kind not in RING_KINDS:
            raise DocumentError("'ring' must be one of %s, got %r" % (', '.join(RING_KINDS), ring_kind),
                                where='$.ring')
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise DocumentError("'n' must be a positive integer, got %r" % (n,), where='$.n')
        distinct = raw.get('distinct', False)
        if not isinstance(distinct, bool):
            raise DocumentError("'distinct' must be true or false", where='$.distinct')
        if kind == 'cube' and ring_kind == 'matrix2':
            raise DocumentError('A cube needs a commutative ring; matrix2 is not one', where='$.ring')

        ring = ring_for(ring_kind)
        if kind == 'matrix':
            entries = _canonical_square(ring, raw['entries'], n, '$.entries')
        else:
            entries = _canonical_array(raw['entries'], n, '$.entries',
                                       lambda section, where: _canonical_square(ring, section, n, where))
        document = cls(kind, ring_kind, n, entries, distinct)
        if distinct:
            document.__check_distinct()
        return document

    def __check_distinct(self):
        if self.ring != 'symbolic':
            return
        seen = {}
        for where, literal in self.__scalars():
            if isinstance(literal, str) and VARIABLE_PATTERN.match(literal):
                if literal in seen:
                    raise DocumentError("Variable '%s' appears more than once (first at %s)"
                                        % (literal, seen[literal]), where=where)
                seen[literal] = where

    def __scalars(self):
        if self.kind == 'matrix':
            sections = [('$.entries', self.entries)]
        else:
            sections = [('$.entries[%d]' % k, section) for k, section in enumerate(self.entries)]
        for prefix, rows in sections:
            for i, row in enumerate(rows):
                for j, literal in enumerate(row):
                    yield '%s[%d][%d]' % (prefix, i, j), literal

    def ring_instance(self):
        return ring_for(self.ring)

    def to_matrix(self):
        """The SquareMatrix or CubeMatrix of ring elements this document describes."""
        ring = self.ring_instance()

        def square(rows):
            return SquareMatrix.of([[ring.parse(_thaw(literal)) for literal in row] for row in rows])

        if self.kind == 'matrix':
            return square(self.entries)
        return CubeMatrix.of([square(section) for section in self.entries])

    @classmethod
    def from_matrix(cls, matrix, ring_kind):
        ring = ring_for(ring_kind)

        def literals(square):
            return tuple(tuple(_freeze(ring.literal(a)) for a in row) for row in square.rows)

        if isinstance(matrix, CubeMatrix):
            return cls('cube', ring_kind, matrix.n, tuple(literals(section) for section in matrix.sections))
        return cls('matrix', ring_kind, matrix.n, literals(matrix))

    def as_json(self):
        document = {'kind': self.kind, 'ring': self.ring, 'n': self.n, 'entries': _thaw(self.entries)}
        if self.distinct:
            document['distinct'] = True
        return document

    def dump(self):
        """Canonical one-line text; parsing it back gives an equal document."""
        return json.dumps(self.as_json(), separators=(', ', ': '))

    def __str__(self):
        return self.dump()


def parse_document(text):
    return MatrixDocument.parse(text)


def _canonical_array(value, n, where, item):
    if not isinstance(value, list):
        raise DocumentError('Expected an array of %d items' % n, where=where)
    if len(value) != n:
        raise DocumentError('Expected %d items, found %d' % (n, len(value)), where=where)
    return tuple(item(element, '%s[%d]' % (where, index)) for index, element in enumerate(value))


def _canonical_square(ring, rows, n, where):
    def scalar(literal, at):
        if isinstance(literal, float):
            raise DocumentError('Floating-point scalar %r is not exact; write it as "p/q"' % literal, where=at)
        try:
            return _freeze(ring.literal(ring.parse(literal)))
        except DomainError as e:
            raise DocumentError(str(e), where=at)

    return _canonical_array(rows, n, where,
                            lambda row, at: _canonical_array(row, n, at, scalar))


def _freeze(literal):
    if isinstance(literal, list):
        return tuple(_freeze(item) for item in literal)
    return literal


def _thaw(literal):
    if isinstance(literal, tuple):
        return [_thaw(item) for item in literal]
    return literal
