from positroids.enumeration import pos_enumerate
from positroids.management.base import PositroidCommand
from positroids.serializers import dep_to_json, read_dep


class Command(PositroidCommand):
    help = 'Run the positroid worklist on a matroid dependent set'
    accepts_jobs = True

    def run(self, options):
        dep = read_dep(self.read(options))
        return [dep_to_json(d, info=True) for d in pos_enumerate(dep, jobs=self.jobs(options))]
