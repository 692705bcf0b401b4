import time

from tqdm import tqdm


class ProgressBar:
    """progress bar for benchmark sweeps"""

    def __init__(self, start: int, end: int, desc: str = None, disable: bool = False) -> None:
        self.progress_bar = tqdm(total=end, desc=desc, disable=disable)
        self.update(start)

    def update(self, n: int = 1) -> None:
        """updates progress bar

        Args:
            n (int, optional): Number of steps to update the progress bar with. Defaults to 1.
        """

        self.progress_bar.update(n=n)

    def track(self, **kwargs) -> None:
        """track specific metrics in progress bar"""

        self.progress_bar.set_postfix(**kwargs)

    def close(self) -> None:
        self.progress_bar.close()


class Timer:
    """wall clock timer, used as a context manager"""

    def __init__(self) -> None:
        self.start = None
        self.elapsed_ms = 0.0

    def __enter__(self) -> "Timer":
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args) -> None:
        self.elapsed_ms = (time.perf_counter() - self.start) * 1000
