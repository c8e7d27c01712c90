from positroids.cells import dimension
from positroids.management.base import PositroidCommand
from positroids.serializers import read_dep


class Command(PositroidCommand):
    help = 'Dimension of the positroid cell of a nice dependent set'

    def run(self, options):
        return {'dim': dimension(read_dep(self.read(options)))}
