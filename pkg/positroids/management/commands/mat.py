from positroids.enumeration import mat_maximal
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, read_dep


class Command(PositroidCommand):
    help = 'Maximal matroids contained in the complement of a dependent set'

    def run(self, options):
        return [dep_to_json(dep, info=True) for dep in mat_maximal(read_dep(self.read(options)))]
