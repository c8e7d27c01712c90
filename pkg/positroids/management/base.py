import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from .. import serializers
from .. import settings as app_settings
from ..exceptions import MalformedInputError, PositroidError, SizeLimitError

LOG_LEVELS = {0: logging.WARNING, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}

EXIT_ASSERT = 1
EXIT_INPUT = 2
EXIT_SIZE_LIMIT = 3


class PositroidCommand(BaseCommand):
    """
    Shared plumbing for the verbs: JSON in from --input/--json or standard
    input, data out to --output or standard output, library errors turned
    into CommandError with the matching exit status.
    """
    requires_system_checks = []
    reads_input = True
    accepts_jobs = False

    def add_arguments(self, parser):
        if self.reads_input:
            parser.add_argument('--input', help='Read the input document from this file (default: standard input)')
            parser.add_argument('--json', dest='inline', help='Inline JSON input document')
        parser.add_argument('--output', help='Write the result to this file (default: standard output)')
        if self.accepts_jobs:
            parser.add_argument('--jobs', type=int, default=None,
                                help='Worker processes for the enumeration (default: POSITROID_JOBS)')

    def handle(self, *args, **options):
        logging.getLogger('positroids').setLevel(LOG_LEVELS.get(options['verbosity'], logging.DEBUG))
        try:
            result = self.run(options)
        except SizeLimitError as e:
            raise CommandError(str(e), returncode=EXIT_SIZE_LIMIT)
        except PositroidError as e:
            raise CommandError(str(e), returncode=EXIT_INPUT)
        self.emit(result, options)
        self.check_assertion(result, options)

    def run(self, options):
        raise NotImplementedError('subclasses of PositroidCommand must provide a run() method')

    def check_assertion(self, result, options):
        """Called after the result is written; raise through fail_assertion to exit 1."""

    def jobs(self, options):
        jobs = options.get('jobs')
        if jobs is None:
            jobs = app_settings.get_setting('JOBS')
        if jobs < 1:
            raise MalformedInputError(f'--jobs must be positive, got {jobs}')
        return jobs

    def read_text(self, path):
        try:
            with open(path, encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise MalformedInputError(f'cannot read {path}: {e.strerror}')

    def read(self, options):
        if options.get('inline') is not None:
            text = options['inline']
        elif options.get('input'):
            text = self.read_text(options['input'])
        else:
            text = sys.stdin.read()
        return serializers.loads(text)

    def emit(self, result, options):
        text = result if isinstance(result, str) else serializers.dumps(result)
        if options.get('output'):
            with open(options['output'], 'w', encoding='utf-8') as f:
                f.write(text if text.endswith('\n') else text + '\n')
        else:
            self.stdout.write(text, ending='' if text.endswith('\n') else '\n')

    def fail_assertion(self, message):
        raise CommandError(message, returncode=EXIT_ASSERT)
