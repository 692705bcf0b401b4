VERSION = "0.0.1.dev"

DEFAULT_MAX_ITERATIONS = 50

# double precision fixtures are compared at this tolerance
FIXTURE_TOLERANCE = 1e-9

BENCH_CSV_COLUMNS = ["family", "n", "m", "algo", "seed", "modularity", "time_ms", "iterations"]
