import json
from pathlib import Path

import jsonschema
import pytest

from src.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from src.synthesis.synthesizer import half_depth

ROOT = Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / 'schemas'
GOLDEN = ROOT / 'docs' / 'golden'


def _load(path):
    with open(path) as f:
        return json.load(f)


def _validate(path, schema):
    jsonschema.validate(_load(path), _load(SCHEMAS / schema))


def _run(tmp_path, *args):
    return main(['--out', str(tmp_path), '-q', *args])


def test_graph_matches_golden(tmp_path):
    assert _run(tmp_path, 'graph', '--L', '2') == EXIT_OK
    _validate(tmp_path / 'toric_graph_L2.json', 'graph.schema.json')
    assert _load(tmp_path / 'toric_graph_L2.json') == _load(GOLDEN / 'toric_graph_L2.json')
    assert (tmp_path / 'toric_graph_L2.dot').read_text() == (GOLDEN / 'toric_graph_L2.dot').read_text()


def test_graph_output_is_deterministic(tmp_path):
    first, second = tmp_path / 'a', tmp_path / 'b'
    for out in (first, second):
        assert _run(out, 'graph', '--L', '3', '--format', 'json', '--trace') == EXIT_OK
    assert (first / 'toric_graph_L3.json').read_bytes() == (second / 'toric_graph_L3.json').read_bytes()
    _validate(first / 'toric_graph_L3.json', 'graph.schema.json')
    doc = _load(first / 'toric_graph_L3.json')
    assert doc['edge_count'] == 30
    assert 'trace' in doc
    assert not (first / 'toric_graph_L3.dot').exists()


def test_toric_circuit_matches_golden_qasm(tmp_path):
    assert _run(tmp_path, 'circuit', 'toric', '--L', '2') == EXIT_OK
    _validate(tmp_path / 'circuit_toric_2.json', 'circuit.schema.json')
    qasm = (tmp_path / 'circuit_toric_2.qasm').read_text()
    assert qasm.strip() == (GOLDEN / 'circuit_toric_2.qasm').read_text().strip()


def test_star_circuit_depth(tmp_path):
    assert _run(tmp_path, 'circuit', 'star', '--m', '9') == EXIT_OK
    doc = _load(tmp_path / 'circuit_star_9.json')
    assert doc['depth']['non_h'] == 7


def test_half_circuit_per_level(tmp_path):
    assert _run(tmp_path, 'circuit', 'half', '--n', '8', '--schedule', 'per_level') == EXIT_OK
    doc = _load(tmp_path / 'circuit_half_8.json')
    assert doc['schedule'] == 'per_level'
    assert doc['depth']['non_h'] == half_depth(8, 'per_level')


def test_circuit_without_size_is_usage_error(tmp_path):
    assert _run(tmp_path, 'circuit', 'star') == EXIT_USAGE


def test_verify_pass_and_fail(tmp_path):
    assert _run(tmp_path, 'verify', '--scope', 'pipeline', '--L', '2') == EXIT_OK
    _validate(tmp_path / 'verify_pipeline.json', 'verify_report.schema.json')
    assert _load(tmp_path / 'verify_pipeline.json')['status'] == 'pass'

    assert _run(tmp_path, 'verify', '--scope', 'pipeline', '--L', '2', '--inject-fault', 'adjacency') == EXIT_FAILED
    assert _load(tmp_path / 'verify_pipeline.json')['status'] == 'fail'


def test_verify_rejects_sizes_above_cap(tmp_path):
    assert _run(tmp_path, 'verify', '--scope', 'state', '--L', '4') == EXIT_USAGE
    assert _run(tmp_path, 'verify', '--scope', 'distance', '--m', '5') == EXIT_USAGE


def test_invalid_lattice_size(tmp_path):
    assert _run(tmp_path, 'graph', '--L', '1') == EXIT_USAGE


def test_bad_arguments_exit_with_usage(tmp_path):
    with pytest.raises(SystemExit) as exc:
        _run(tmp_path, 'graph')
    assert exc.value.code == EXIT_USAGE


def test_scaling(tmp_path):
    assert _run(tmp_path, 'scaling', '--sizes', '2', '4', '--plot') == EXIT_OK
    _validate(tmp_path / 'depth_scaling.json', 'depth_scaling.schema.json')
    doc = _load(tmp_path / 'depth_scaling.json')
    assert [row['L'] for row in doc['rows']] == [2, 4]
    assert doc['analysis']['within_bound'] is True
    assert (tmp_path / 'depth_scaling.html').exists()
    assert (tmp_path / 'naive_comparison.html').exists()


def test_graph_edge_list(tmp_path):
    assert _run(tmp_path, 'graph', '--L', '2', '--format', 'edges') == EXIT_OK
    lines = (tmp_path / 'toric_graph_L2.edges').read_text().splitlines()
    assert lines == ['1 2', '1 6', '1 8', '3 4', '3 6', '3 8', '5 6', '7 8']
    assert not (tmp_path / 'toric_graph_L2.json').exists()


def test_verify_rejects_empty_encoder_sample(tmp_path):
    assert _run(tmp_path, 'verify', '--scope', 'encode', '--samples', '0') == EXIT_USAGE
    assert not (tmp_path / 'verify_encode.json').exists()
