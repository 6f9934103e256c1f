"""
Environment-driven defaults for the verify driver.
"""
import os

from dotenv import load_dotenv

load_dotenv()  # Load .env file before reading defaults

TESTING = os.getenv("TESTING", "0") == "1"

DEFAULT_N = int(os.getenv("QBI_DEFAULT_N", "3"))
DEFAULT_MU = os.getenv("QBI_DEFAULT_MU", "1/2,1/2,1/2")
DEFAULT_MAX_DEGREE = int(os.getenv("QBI_MAX_DEGREE", "3"))
DEFAULT_REPORT_PATH = os.getenv("QBI_REPORT_PATH", "qbi_report.json")
DEFAULT_JOBS = int(os.getenv("QBI_JOBS", "1"))
LOG_CONFIG = os.getenv("QBI_LOG_CONFIG", os.path.join(os.path.dirname(os.path.abspath(__file__)), "logging.ini"))

REPORT_VERSION = "1.0"
