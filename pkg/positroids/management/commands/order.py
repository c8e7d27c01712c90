from positroids.enumeration import positroid_order
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, read_dep, relabeling_to_json
from positroids.sets import relabel


class Command(PositroidCommand):
    help = 'Relabel a rank 2 matroid so that it becomes a positroid'

    def run(self, options):
        dep = read_dep(self.read(options))
        relabeling = positroid_order(dep)
        data = relabeling_to_json(relabeling)
        data['relabeled'] = dep_to_json(relabel(dep, relabeling), info=True)
        return data
