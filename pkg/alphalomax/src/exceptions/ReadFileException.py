class ReadFileException(Exception):
    def __init__(self, file: str = None, reason: str = None):
        super(ReadFileException, self).__init__('Can not open input table {}'.format(file or ''))
        self.file = file
        self.description = reason
        self.hint = 'Empirical bins and sample files are read as CSV, or TSV for .tsv, .tab and .txt files'
