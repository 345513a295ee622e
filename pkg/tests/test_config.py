from __future__ import annotations

import pytest

from config import (
    ConfigManager,
    ConfigSourceError,
    ConfigValidationError,
    DefaultValueConfigSource,
    EngineSettings,
    EnvironmentConfigSource,
    ExperimentConfig,
    JsonFileConfigSource,
    OverrideConfigSource,
    read_experiment,
    render_location,
    to_complex,
)
from config.constants import ConfigGroup, get_config_keys_by_group, get_default_value, get_env_key
from conftest import config_path, write_json
from multiplier_core.settings import grid_setting, tolerance_setting

DOMAIN = {'factors': [{'disc': {'radius': 2.0}}, {'disc': {'radius': 2.0}}]}


def test_error_locations_render_as_json_paths() -> None:
    assert render_location(('multiplier', 'source', 'laurent_poles', 0)) == '.multiplier.source.laurent_poles[0]'
    assert render_location(()) == '.'


def test_missing_box_is_reported_by_path() -> None:
    with pytest.raises(ConfigValidationError) as info:
        ExperimentConfig.parse({'domain': DOMAIN})
    assert info.value.path == '.box'


def test_box_must_match_the_domain() -> None:
    with pytest.raises(ConfigValidationError) as info:
        ExperimentConfig.parse({'domain': DOMAIN, 'box': [3]})
    assert info.value.path == '.'


def test_nested_errors_point_into_the_literal() -> None:
    raw = {'domain': DOMAIN, 'box': [3, 3], 'multiplier': {'source': {'laurent_poles': ['x', [0.1, 0.0]]}}}
    with pytest.raises(ConfigValidationError) as info:
        ExperimentConfig.parse(raw)
    assert info.value.path == '.multiplier.source.laurent_poles[0]'


def test_germ_literal_takes_exactly_one_kind() -> None:
    germ = {
        'product_poles': [0.1, 0.2],
        'rational': {'numerators': [[1.0], [1.0]], 'denominators': [[-0.1, 1.0], [-0.2, 1.0]]},
    }
    with pytest.raises(ConfigValidationError) as info:
        ExperimentConfig.parse({'domain': DOMAIN, 'box': [3, 3], 'germ': germ})
    assert info.value.path == '.germ'


def test_complex_values_accept_bare_numbers() -> None:
    config = ExperimentConfig.parse({
        'domain': {'factors': [{'disc': {'center': 0.5, 'radius': 1.0}}]},
        'box': [2],
        'germ': {'product_poles': [[0.1, -0.2], 0.3]},
    })
    assert to_complex(config.domain.factors[0].disc.center) == 0.5
    assert [to_complex(p) for p in config.germ.product_poles] == [0.1 - 0.2j, 0.3]


def test_shipped_experiment_files_validate() -> None:
    config = ExperimentConfig.load(config_path('dilation_bidisc.json'))
    assert config.name == 'dilation-bidisc'
    assert config.dim == 2
    assert config.z_grid.radii == 1
    zero = ExperimentConfig.load(config_path('zero_multiplier.json'))
    assert zero.multiplier.source.zero
    seminorm = ExperimentConfig.load(config_path('seminorm_example.json'))
    assert seminorm.delta.ratio == 0.5
    assert seminorm.seminorm.expected == 0.5


def test_sources_merge_by_priority() -> None:
    manager = ConfigManager([
        DefaultValueConfigSource(),
        JsonFileConfigSource({'tolerance': 1e-3, 'seed': '5'}),
        OverrideConfigSource({'tolerance': 1e-6, 'nodes': None}),
    ])
    settings = EngineSettings.acquire(manager)
    assert settings.tolerance == 1e-6
    assert settings.seed == 5
    assert settings.grid_radii == grid_setting.radii
    assert settings.nodes is None
    assert settings.log_level == 'WARNING'


def test_environment_sits_between_file_and_defaults(monkeypatch, tmp_path) -> None:
    monkeypatch.setenv('MULTIPLIER_GRID_ANGLES', '12')
    monkeypatch.setenv('MULTIPLIER_TOLERANCE', '1e-4')
    manager = ConfigManager([
        JsonFileConfigSource({'tolerance': 1e-7}),
        EnvironmentConfigSource(dotenv_path=str(tmp_path / 'absent.env')),
        DefaultValueConfigSource(),
    ])
    settings = EngineSettings.acquire(manager)
    assert settings.grid_angles == 12
    assert settings.tolerance == 1e-7


def test_out_of_range_setting_is_a_validation_error() -> None:
    manager = ConfigManager([OverrideConfigSource({'contour_margin': 1.5}), DefaultValueConfigSource()])
    with pytest.raises(ConfigValidationError) as info:
        EngineSettings.acquire(manager)
    assert info.value.path == '.contour_margin'


def test_unreadable_source_falls_back_to_defaults() -> None:
    manager = ConfigManager([JsonFileConfigSource({'seed': 'many'}), DefaultValueConfigSource()])
    assert EngineSettings.acquire(manager).seed == 0


def test_apply_pushes_knobs_into_the_engine() -> None:
    manager = ConfigManager([OverrideConfigSource({'grid_angles': 3, 'tolerance': 1e-5}), DefaultValueConfigSource()])
    EngineSettings.acquire(manager).apply()
    assert grid_setting.angles == 3
    assert tolerance_setting.tolerance == 1e-5


def test_read_experiment_applies_overrides(tmp_path) -> None:
    path = write_json(tmp_path / 'experiment.json', {'name': 'kept', 'box': [2]})
    raw = read_experiment(path, {'box': [5], 'name': None})
    assert raw == {'name': 'kept', 'box': [5]}


def test_read_experiment_errors(tmp_path) -> None:
    with pytest.raises(ConfigSourceError):
        read_experiment(tmp_path / 'missing.json')
    broken = tmp_path / 'broken.json'
    broken.write_text('{"box": [', encoding='utf-8')
    with pytest.raises(ConfigSourceError):
        read_experiment(broken)
    listed = tmp_path / 'listed.json'
    listed.write_text('[1, 2]', encoding='utf-8')
    with pytest.raises(ConfigValidationError):
        read_experiment(listed)


def test_metadata_helpers() -> None:
    assert get_config_keys_by_group(ConfigGroup.GRID) == [
        'grid_radii', 'grid_angles', 'boundary_points', 'local_radius_fraction',
    ]
    assert get_env_key('seed') == 'MULTIPLIER_SEED'
    assert get_env_key('unknown') is None
    assert get_default_value('hyperplane_nodes') == 48
    assert get_default_value('nodes') is None


def test_cached_values_survive_refresh_and_clear() -> None:
    manager = ConfigManager([OverrideConfigSource({'seed': 3}), DefaultValueConfigSource()])
    assert manager.get_cached_value('seed') == 3
    manager.refresh_cache()
    assert manager.get_cached_value('seed') == 3
    manager.clear_cache()
    assert manager.get_cached_value('tolerance') == tolerance_setting.tolerance


def test_each_value_remembers_its_source() -> None:
    manager = ConfigManager([
        OverrideConfigSource({'seed': 9}),
        JsonFileConfigSource({'seed': 1, 'grid_radii': 2}),
        DefaultValueConfigSource(),
    ])
    assert manager.origin('seed') == 'command line'
    assert manager.origin('grid_radii') == 'experiment file'
    assert manager.origin('tolerance') == 'default'
    assert manager.origin('nodes') is None
    assert manager.describe()['seed'] == '9 (command line)'
