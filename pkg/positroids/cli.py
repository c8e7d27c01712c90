"""
The ``positroids`` console script.

Runs this app's management commands without a Django project: a minimal
settings object is configured in memory, so no database and no environment
variables are involved.
"""
import os
import sys

import django
from django.conf import settings
from django.core.management import find_commands, load_command_class

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'positroids': {'handlers': ['stderr'], 'level': 'WARNING', 'propagate': False},
    },
}


def verbs():
    return sorted(find_commands(os.path.join(os.path.dirname(__file__), 'management')))


def usage(prog):
    return f'usage: {prog} <verb> [options]\n\nverbs: {" ".join(verbs())}\n'


def main(argv=None):
    argv = list(sys.argv if argv is None else argv)
    prog = os.path.basename(argv[0]) if argv else 'positroids'
    if prog == '__main__.py':
        prog = 'python -m positroids'

    if not settings.configured:
        settings.configure(INSTALLED_APPS=['positroids'], LOGGING=LOGGING)
    django.setup()

    if len(argv) < 2 or argv[1] in ('-h', '--help', 'help'):
        sys.stdout.write(usage(prog))
        return
    verb = argv[1]
    if verb not in verbs():
        sys.stderr.write(f'unknown verb {verb!r}\n' + usage(prog))
        sys.exit(2)
    command = load_command_class('positroids', verb)
    command.run_from_argv([prog, verb, *argv[2:]])
