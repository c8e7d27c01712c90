from positroids.le import necklace_from_bases
from positroids.management.base import PositroidCommand
from positroids.serializers import necklace_to_json, read_bases


class Command(PositroidCommand):
    help = 'Grassmann necklace of a bases family'

    def run(self, options):
        return necklace_to_json(necklace_from_bases(read_bases(self.read(options))))
