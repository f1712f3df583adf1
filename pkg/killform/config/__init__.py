from .caps import CapsConfig, KillformConfig, ParallelConfig, THREADS_ENV
