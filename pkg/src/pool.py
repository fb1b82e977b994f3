from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, List, Sequence, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    return os.cpu_count() or 1


def run_tasks(fn: Callable[[T], R], tasks: Sequence[T], jobs: int = 1, desc: str = "Tarefas") -> List[R]:
    """Executa ``fn`` em cada tarefa e devolve os resultados na ordem das tarefas.

    ``fn`` precisa ser uma função de módulo (picklable) quando ``jobs > 1``.
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tqdm(tasks, desc=desc, disable=not tasks)]
    results: List[R | None] = [None] * len(tasks)
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
        futures = {ex.submit(fn, t): i for i, t in enumerate(tasks)}
        for fut in tqdm(as_completed(futures), total=len(futures), desc=desc):
            results[futures[fut]] = fut.result()
    return results  # type: ignore[return-value]
