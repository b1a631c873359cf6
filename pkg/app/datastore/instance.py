import logging
from pathlib import Path
from typing import List

import numpy as np

from app.benchmark.generator import InstanceSpec, application_blocks, size_dep_mat
from app.datastore import flatfile
from app.model.errors import DataFormatError
from app.model.workload import Chromosome, WorkloadInstance
from app.repository.instance import InstanceRepository

logger = logging.getLogger(__name__)

ETC_SUFFIX = ".etc"
DEP_SUFFIX = ".dep"
MANIFEST_SUFFIX = ".manifest"


def instance_paths(prefix: Path) -> tuple[Path, Path, Path]:
    prefix = Path(prefix)
    return (
        prefix.parent / f"{prefix.name}{ETC_SUFFIX}",
        prefix.parent / f"{prefix.name}{DEP_SUFFIX}",
        prefix.parent / f"{prefix.name}{MANIFEST_SUFFIX}",
    )


class InstanceDatastore(InstanceRepository):
    """Instances stored as ``<prefix>.etc``, ``<prefix>.dep`` and ``<prefix>.manifest``.

    Without a manifest the dimensions are inferred from the files and all tasks
    form a single application; the ETC value count must then divide evenly by n.
    """

    def load(self, prefix: Path) -> WorkloadInstance:
        etc_path, dep_path, manifest_path = instance_paths(prefix)
        for path in (etc_path, dep_path):
            if not path.exists():
                raise FileNotFoundError(f"Instance file not found: {path}")

        try:
            if manifest_path.exists():
                manifest = flatfile.read_manifest(manifest_path)
                n, q, p = int(manifest["n"]), int(manifest["q"]), int(manifest.get("p", 1))
            else:
                n = flatfile.count_rows(dep_path)
                if n == 0:
                    raise DataFormatError(f"{dep_path} is empty")
                tokens = flatfile.count_tokens(etc_path)
                if tokens == 0 or tokens % n:
                    raise DataFormatError(
                        f"{etc_path} holds {tokens} values, not a multiple of {n} tasks; add a manifest"
                    )
                q = tokens // n
                p = 1
            etc = flatfile.parse_etc_file(etc_path, n, q)
            dag = flatfile.parse_dep_file(dep_path, n)
        except (KeyError, ValueError) as e:
            logging.error(f"Error loading instance {prefix} - {e}")
            raise

        logger.info("loaded instance %s: %d tasks, %d clouds, %d applications", prefix, n, q, p)
        return WorkloadInstance(etc=etc, dag=dag, app_of=application_blocks(n, p), p=p)

    def save(
        self, instance: WorkloadInstance, spec: InstanceSpec, directory: Path
    ) -> List[Path]:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        etc_path, dep_path, manifest_path = instance_paths(directory / spec.stem)
        counts = np.bincount(instance.app_of, minlength=instance.p)

        try:
            flatfile.write_etc_file(etc_path, instance.etc)
            flatfile.write_dep_file(dep_path, instance.dag)
            flatfile.write_manifest(
                manifest_path,
                {
                    "n": spec.n,
                    "q": spec.q,
                    "consistency": spec.consistency,
                    "task_het": spec.task_het,
                    "machine_het": spec.machine_het,
                    "p": spec.p,
                    "edge_prob": spec.edge_prob,
                    "seed": spec.seed,
                    "size_dep_mat": size_dep_mat(int(c) for c in counts),
                },
            )
        except OSError as e:
            logging.error(f"Error writing instance {spec.stem} to {directory} - {e}")
            raise
        return [etc_path, dep_path, manifest_path]

    def load_schedule(self, path: Path, instance: WorkloadInstance) -> Chromosome:
        if not Path(path).exists():
            raise FileNotFoundError(f"Schedule file not found: {path}")
        return flatfile.parse_schedule_file(Path(path), instance)

    def save_schedule(self, path: Path, genes: Chromosome) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        try:
            flatfile.write_schedule_file(path, genes)
        except OSError as e:
            logging.error(f"Error writing schedule to {path} - {e}")
            raise
        return path
