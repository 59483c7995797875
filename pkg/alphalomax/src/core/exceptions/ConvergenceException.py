class ConvergenceException(Exception):
    def __init__(self, description: str = None, hint: str = None, error_estimate: float = None):
        super(ConvergenceException, self).__init__('Numerical evaluation did not converge')
        self.description = description
        self.hint = hint
        self.error_estimate = error_estimate
