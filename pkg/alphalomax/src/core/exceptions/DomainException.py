class DomainException(Exception):
    def __init__(self, description: str = None, hint: str = None):
        super(DomainException, self).__init__('Argument outside the function domain')
        self.description = description
        self.hint = hint
