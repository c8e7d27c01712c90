from positroids.cells import dualize
from positroids.management.base import PositroidCommand
from positroids.serializers import bases_to_json, read_bases


class Command(PositroidCommand):
    help = 'Bases of the dual matroid'

    def run(self, options):
        return bases_to_json(dualize(read_bases(self.read(options))))
