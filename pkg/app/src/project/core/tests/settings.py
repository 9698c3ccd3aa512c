import os

# Base settings read environment variables while they are imported, so test-specific
# defaults must be configured first. This keeps tests independent of a developer's
# potentially stale .env file.
TEST_ENV_DEFAULTS = {
    "QDWORK_STORAGE_BACKEND": "fsspec-memory",
    "QDWORK_REPORTS_ROOT": "/qdwork-reports",
    "QDWORK_JOBS": "1",
    "LOG_LEVEL": "WARNING",
}
for name, value in TEST_ENV_DEFAULTS.items():
    os.environ.setdefault(name, value)

os.environ["SENTRY_DSN"] = ""

from project.settings import *  # noqa: E402,F403
