import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# compiled kernels make the first example of a run slow
settings.register_profile(
    "panelblas", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("panelblas")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def colmajor(a, ld=None):
    """Flat column-major copy of a 2-D array with optional padding rows."""
    a = np.asarray(a, dtype=np.float64)
    m, n = a.shape
    ld = max(1, m) if ld is None else ld
    full = np.full((ld, n), np.nan)
    full[:m] = a
    return full.reshape(-1, order="F").copy(), ld


def dense(buf, m, n, ld):
    return buf.reshape(-1)[: ld * n].reshape(n, ld).T[:m].copy() if n else np.zeros((m, 0))


def well_conditioned_tri(rng, n):
    a = rng.uniform(-1, 1, (n, n)) / max(n, 1)
    a[np.diag_indices(n)] = rng.choice([-1.0, 1.0], n) * rng.uniform(1, 2, n)
    return a


def rel_err(x, ref):
    scale = np.max(np.abs(ref)) if np.size(ref) else 0.0
    err = np.max(np.abs(np.asarray(x) - ref)) if np.size(ref) else 0.0
    return err / scale if scale > 0 else err
