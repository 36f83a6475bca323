"""
flagpos Configuration Settings
Loads environment variables and provides the constants every suite reads
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Base paths
BASE_DIR = Path(__file__).parent.parent
HINTS_DIR = BASE_DIR / "counterexamples"

# ============================================================================
# REPRODUCIBILITY
# ============================================================================
DEFAULT_SEED = int(os.getenv("FLAGPOS_SEED", 42))
DEFAULT_SAMPLES = int(os.getenv("FLAGPOS_SAMPLES", 100))

# Sampled rationals are p/q with p, q uniform in [1, PARAM_MAX]
PARAM_MAX = int(os.getenv("FLAGPOS_PARAM_MAX", 100))

# ============================================================================
# ENUMERATION CAPS
# ============================================================================
REDUCED_WORD_CAP = int(os.getenv("FLAGPOS_REDUCED_WORD_CAP", 100000))

# Fourier-Motzkin stops (and the certifier answers Unknown) past this many rows
FME_ROW_CAP = int(os.getenv("FLAGPOS_FME_ROW_CAP", 4000))
CERTIFIER_MAX_ROUNDS = int(os.getenv("FLAGPOS_CERTIFIER_MAX_ROUNDS", 64))

B2_DOUBLING_CAP = int(os.getenv("FLAGPOS_B2_DOUBLING_CAP", 64))
FALSIFY_TRIALS = int(os.getenv("FLAGPOS_FALSIFY_TRIALS", 10000))

# ============================================================================
# PROOF HINTS
# ============================================================================
HINTS_FILE = Path(os.getenv("FLAGPOS_HINTS_FILE", str(HINTS_DIR / "proof_hints.yaml")))

# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================
LOG_LEVEL = os.getenv("FLAGPOS_LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("FLAGPOS_LOG_FILE")  # None = stderr only

# ============================================================================
# FEATURE FLAGS
# ============================================================================
FEATURES = {
    "proof_hints": os.getenv("FLAGPOS_USE_HINTS", "true").lower() == "true",
    "chain_stepping": os.getenv("FLAGPOS_CHAIN_STEPPING", "true").lower() == "true",
    "fme_fallback": os.getenv("FLAGPOS_FME_FALLBACK", "true").lower() == "true",
}


def print_config():
    """Print current configuration (for debugging)"""
    print("=" * 60)
    print("FLAGPOS CONFIGURATION")
    print("=" * 60)
    print(f"Base Directory: {BASE_DIR}")
    print(f"Default Seed: {DEFAULT_SEED}")
    print(f"Default Samples: {DEFAULT_SAMPLES}")
    print(f"Parameter Range: [1, {PARAM_MAX}]")
    print(f"Reduced Word Cap: {REDUCED_WORD_CAP}")
    print(f"FME Row Cap: {FME_ROW_CAP}")
    print(f"Certifier Rounds: {CERTIFIER_MAX_ROUNDS}")
    print(f"B2 Doubling Cap: {B2_DOUBLING_CAP}")
    print(f"Falsification Trials: {FALSIFY_TRIALS}")
    print(f"Hints File: {HINTS_FILE}")
    print(f"Log Level: {LOG_LEVEL}")
    print(f"Log File: {LOG_FILE or '(stderr)'}")
    print("\nFeatures:")
    for feature, enabled in FEATURES.items():
        status = "[ENABLED]" if enabled else "[DISABLED]"
        print(f"  {status} {feature}")
    print("=" * 60)


if __name__ == "__main__":
    print_config()
