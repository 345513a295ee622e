"""
Configuration constants and metadata

Centralized metadata for the engine knobs. Defaults are read from the engine's own
setting models so library use and the command line runner agree.
"""

from enum import Enum
from typing import Dict, Any, Optional, List

from multiplier_core.settings import grid_setting, quadrature_setting, tolerance_setting

ENV_PREFIX = 'MULTIPLIER_'


class ConfigType(Enum):
    """Configuration value types"""
    STRING = "string"
    INTEGER = "integer"
    FLOAT = "float"
    BOOLEAN = "boolean"


class ConfigGroup(Enum):
    """Configuration groups for logical organization"""
    QUADRATURE = "quadrature"
    GRID = "grid"
    VERIFY = "verify"
    LOGGING = "logging"


CONFIG_METADATA: Dict[str, Dict[str, Any]] = {
    # Quadrature
    'nodes': {
        'env_key': f'{ENV_PREFIX}NODES',
        'type': ConfigType.INTEGER,
        'nullable': True,
        'group': ConfigGroup.QUADRATURE,
        'description': 'Nodes per circle; empty means the box-dependent default',
        'validation': {
            'ge': 4,
            'le': 4096
        }
    },
    'max_nodes': {
        'env_key': f'{ENV_PREFIX}MAX_NODES',
        'type': ConfigType.INTEGER,
        'default': quadrature_setting.max_nodes,
        'group': ConfigGroup.QUADRATURE,
        'description': 'Largest node count per circle chosen from the contour geometry',
        'validation': {
            'ge': 16,
            'le': 8192
        }
    },
    'hyperplane_nodes': {
        'env_key': f'{ENV_PREFIX}HYPERPLANE_NODES',
        'type': ConfigType.INTEGER,
        'default': quadrature_setting.hyperplane_nodes,
        'group': ConfigGroup.QUADRATURE,
        'description': 'Nodes per circle of the Cauchy mean on coordinate hyperplanes',
        'validation': {
            'ge': 4,
            'le': 1024
        }
    },
    'contour_margin': {
        'env_key': f'{ENV_PREFIX}CONTOUR_MARGIN',
        'type': ConfigType.FLOAT,
        'default': quadrature_setting.contour_margin,
        'group': ConfigGroup.QUADRATURE,
        'description': 'Log-interpolation weight of separating circles',
        'validation': {
            'gt': 0.0,
            'lt': 1.0
        }
    },

    # Grids
    'grid_radii': {
        'env_key': f'{ENV_PREFIX}GRID_RADII',
        'type': ConfigType.INTEGER,
        'default': grid_setting.radii,
        'group': ConfigGroup.GRID,
        'description': 'Radial samples per factor for membership and K-grids',
        'validation': {
            'ge': 1,
            'le': 64
        }
    },
    'grid_angles': {
        'env_key': f'{ENV_PREFIX}GRID_ANGLES',
        'type': ConfigType.INTEGER,
        'default': grid_setting.angles,
        'group': ConfigGroup.GRID,
        'description': 'Angular samples per factor for membership and K-grids',
        'validation': {
            'ge': 1,
            'le': 256
        }
    },
    'boundary_points': {
        'env_key': f'{ENV_PREFIX}BOUNDARY_POINTS',
        'type': ConfigType.INTEGER,
        'default': grid_setting.boundary_points,
        'group': ConfigGroup.GRID,
        'description': 'Points per boundary circle in seminorm suprema',
        'validation': {
            'ge': 1,
            'le': 4096
        }
    },
    'local_radius_fraction': {
        'env_key': f'{ENV_PREFIX}LOCAL_RADIUS_FRACTION',
        'type': ConfigType.FLOAT,
        'default': grid_setting.local_radius_fraction,
        'group': ConfigGroup.GRID,
        'description': 'Local Cauchy radius relative to the distance to singularities',
        'validation': {
            'gt': 0.0,
            'lt': 1.0
        }
    },

    # Verification
    'tolerance': {
        'env_key': f'{ENV_PREFIX}TOLERANCE',
        'type': ConfigType.FLOAT,
        'default': tolerance_setting.tolerance,
        'group': ConfigGroup.VERIFY,
        'description': 'Pass/fail tolerance of report rows',
        'validation': {
            'gt': 0.0
        }
    },
    'relative_floor': {
        'env_key': f'{ENV_PREFIX}RELATIVE_FLOOR',
        'type': ConfigType.FLOAT,
        'default': tolerance_setting.relative_floor,
        'group': ConfigGroup.VERIFY,
        'description': 'Relative errors use max(|reference|, floor * scale)',
        'validation': {
            'ge': 0.0,
            'le': 1.0
        }
    },
    'seed': {
        'env_key': f'{ENV_PREFIX}SEED',
        'type': ConfigType.INTEGER,
        'default': 0,
        'group': ConfigGroup.VERIFY,
        'description': 'Seed of randomized checks',
        'validation': {
            'ge': 0
        }
    },

    # Logging
    'log_level': {
        'env_key': f'{ENV_PREFIX}LOG_LEVEL',
        'type': ConfigType.STRING,
        'default': 'WARNING',
        'group': ConfigGroup.LOGGING,
        'description': 'Log level of the runner',
        'validation': {
            'schema_extra': {
                'pattern': r'^(?i:debug|info|warn|warning|error|critical)$'
            }
        }
    },
}


def get_config_keys_by_group(group: ConfigGroup) -> List[str]:
    """Get all configuration keys for a specific group"""
    return [key for key, metadata in CONFIG_METADATA.items()
            if metadata.get('group') == group]


def is_required_config(key: str) -> bool:
    """Check if a configuration key is required"""
    return CONFIG_METADATA.get(key, {}).get('required', False)


def is_nullable_config(key: str) -> bool:
    return CONFIG_METADATA.get(key, {}).get('nullable', False)


def get_default_value(key: str) -> Any:
    """Get default value for a configuration key"""
    return CONFIG_METADATA.get(key, {}).get('default')


def get_env_key(key: str) -> Optional[str]:
    return CONFIG_METADATA.get(key, {}).get('env_key')


def get_all_config_keys() -> List[str]:
    """Get all configuration keys"""
    return list(CONFIG_METADATA.keys())
