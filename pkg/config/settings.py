import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Output Configuration
OUTPUT_DIR = os.getenv('TORIC_OUTPUT_DIR', 'data/processed')

# Simulation Settings
MAX_SIM_QUBITS = int(os.getenv('MAX_SIM_QUBITS', '20'))  # Dense statevectors above this are refused
AMPLITUDE_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-12

# Verification Settings
DEFAULT_SEED = int(os.getenv('TORIC_SEED', '2024'))
ENCODER_SAMPLES = 20
DISTANCE_MAX_WEIGHT = 4

# Depth-scaling report (lattice sizes L)
SCALING_SIZES = [2, 4, 8, 16, 32, 64]

# Test Settings
RUN_SLOW_TESTS = os.getenv('RUN_SLOW_TESTS', '0') == '1'

# Logging Configuration
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_FILE = os.path.join(OUTPUT_DIR, 'toric_graph.log')
