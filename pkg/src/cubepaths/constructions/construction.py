from typing import Any, Callable, Iterable

from joblib import Parallel, delayed
from loguru import logger

from cubepaths.cube import Decomposition


class Construction:
    """Constructions assemble a :class:`~cubepaths.cube.Decomposition` from smaller material.

    Subclasses implement ``forward``. Independent pieces (one per inner path, one per subcube
    copy) go through :meth:`map`, which fans them out over joblib workers when ``parallel`` is
    set and always returns results in submission order.

    :param parallel: whether to compute independent pieces in parallel.
    :param num_workers: if running in parallel, number of jobs to use.

    Example
    --------

    Constructions are callable objects::

        >>> from cubepaths.constructions import BlockLift, antipodal_decomposition
        >>> lift = BlockLift(t=3)
        >>> lift(antipodal_decomposition(1))
        Decomposition(n=3, k=3, count=4)

    """

    def __init__(self, parallel: bool = False, num_workers: int = -1):
        self.parallel = parallel
        self.num_workers = num_workers

    def __call__(self, *args, **kwargs) -> Decomposition:
        result = self.forward(*args, **kwargs)
        logger.debug(f"{self!r} built {result!r}")
        return result

    def forward(self, *args, **kwargs) -> Decomposition:
        raise NotImplementedError

    def map(self, fn: Callable, items: Iterable[Any]) -> list:
        if self.parallel:
            return Parallel(n_jobs=self.num_workers)(delayed(fn)(item) for item in items)
        return [fn(item) for item in items]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"
