from django.core.management.base import CommandError

from positroids.le import bases_from_le, le_of_bases
from positroids.management.base import EXIT_INPUT, PositroidCommand
from positroids.render import parse_ascii
from positroids.serializers import bases_to_json, diagram_from_json, diagram_to_json, read_bases

DIRECTIONS = ('to-bases', 'from-bases')


class Command(PositroidCommand):
    help = 'Convert between bases families and Le diagrams'

    def add_arguments(self, parser):
        parser.add_argument('direction', choices=DIRECTIONS)
        parser.add_argument('--ascii', action='store_true',
                            help='to-bases: read the diagram in the ASCII form written by render')
        super().add_arguments(parser)

    def read(self, options):
        if options['direction'] == 'to-bases' and options['ascii']:
            if options.get('inline') is not None:
                return options['inline']
            if options.get('input'):
                return self.read_text(options['input'])
            raise CommandError('--ascii needs --input or --json', returncode=EXIT_INPUT)
        return super().read(options)

    def run(self, options):
        data = self.read(options)
        if options['direction'] == 'from-bases':
            return diagram_to_json(le_of_bases(read_bases(data)))
        diagram = parse_ascii(data) if options['ascii'] else diagram_from_json(data)
        return bases_to_json(bases_from_le(diagram))
