from positroids.management.base import PositroidCommand
from positroids.realize import realize_nice
from positroids.serializers import read_dep, witness_to_json


class Command(PositroidCommand):
    help = 'Exact 2 x n witness matrix for a nice dependent set'

    def run(self, options):
        return witness_to_json(realize_nice(read_dep(self.read(options))))
