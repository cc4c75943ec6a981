from .random import set_random_seed
from .config import EasyConfig, print_cfg
from .logger import setup_logger, generate_run_directory
from .metrics import AverageMeter
from .registry import Registry, build_from_cfg
