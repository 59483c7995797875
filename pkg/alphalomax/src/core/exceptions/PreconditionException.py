class PreconditionException(Exception):
    def __init__(self, description: str = None, hint: str = None):
        super(PreconditionException, self).__init__('Asymptotic regime not reached')
        self.description = description
        self.hint = hint
