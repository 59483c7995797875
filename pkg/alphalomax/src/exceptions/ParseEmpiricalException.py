class ParseEmpiricalException(Exception):
    def __init__(self, description: str = None, hint: str = None, line: int = None):
        message = 'Error parsing empirical data'
        if line is not None:
            message = '{} (line {})'.format(message, line)
        super(ParseEmpiricalException, self).__init__(message)
        self.description = description
        self.hint = hint
        self.line = line
