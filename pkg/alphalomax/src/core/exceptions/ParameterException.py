class ParameterException(Exception):
    def __init__(self, description: str = None, hint: str = None):
        super(ParameterException, self).__init__('Invalid model parameters')
        self.description = description
        self.hint = hint
